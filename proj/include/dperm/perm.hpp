#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dperm {

// One-line notation, 1-indexed. word()[0] is unused padding.
class Permutation {
public:
    Permutation() : w_{0}, inv_{0} {}
    explicit Permutation(const std::vector<int>& one_line);

    static Permutation parse(const std::string& s);
    static Permutation identity(int len);

    int size() const { return static_cast<int>(w_.size()) - 1; }
    int half() const { return size() / 2; }
    int operator()(int i) const { return w_[i]; }
    int inv(int i) const { return inv_[i]; }

    std::vector<int> one_line() const { return {w_.begin() + 1, w_.end()}; }
    std::string str() const;
    std::string cycle_notation() const;

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

private:
    std::vector<int> w_;
    std::vector<int> inv_;
};

enum class DClass { All, ESemi, OSemi, Derangement, Cycle, Pure };

DClass parse_class(const std::string& s);
std::string class_name(DClass c);

bool is_d_permutation(const Permutation& p);
bool in_class(const Permutation& p, DClass c);
int cycle_count(const Permutation& p);
bool is_record(const Permutation& p, int i);
bool is_antirecord(const Permutation& p, int i);
Permutation reversal_conjugate(const Permutation& p);

// Lexicographic backtracking over D-permutations of [2n].
void for_each_d_permutation(int n, DClass c, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> d_permutations(int n, DClass c = DClass::All);

struct ClassCounts {
    std::uint64_t dc, deo, de, de_union_do, dpure, d;
    std::uint64_t d_o;  // counted separately, must equal de
};
ClassCounts class_counts(int n);

}  // namespace dperm
