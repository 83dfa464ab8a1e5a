#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dperm/cfrac.hpp"
#include "dperm/perm.hpp"

namespace dperm {

enum class Step { Rise, Fall, LongLevel };
enum class PathKind { Dyck, Motzkin, Schroeder, AlmostDyck, ZeroSchroeder };

struct Path {
    std::vector<Step> steps;
    PathKind kind = PathKind::AlmostDyck;

    // h_0 .. h_len, a long level step advances the abscissa by 2
    std::vector<int> heights() const;
    int length() const;
    bool valid() const;
    std::string str() const;  // U, D, L per step
    bool operator==(const Path& o) const { return steps == o.steps && kind == o.kind; }
};

int ceil_half(int a);

Path fz_path(const Permutation& p);
// Each (0,-1,0) excursion becomes a long level step at height 0.
Path psi(const Path& almost_dyck);
Path psi_inverse(const Path& zero_schroeder);

enum class LabelVariant { Xi, XiHat };

// label of step i stored at [i-1]; labels start at 0
std::vector<int> fz_labels(const Permutation& p, LabelVariant v);
// Largest label allowed on step i (1-indexed) of an almost-Dyck path.
int fz_label_bound(const Path& path, int i);
Permutation fz_inverse(const Path& path, const std::vector<int>& labels, LabelVariant v);

using PairLabel = std::pair<int, int>;
std::vector<PairLabel> biane_labels(const Permutation& p);
PairLabel biane_label_bound(const Path& path, int i);

struct BianeHistory {
    Permutation perm;
    std::vector<int> closers;     // stages at which a non-singleton cycle closed
    int cycles = 0;               // includes fixed points
    std::vector<int> free_counts; // f_i after stage i, index 0 = f_0
};
BianeHistory biane_inverse(const Path& path, const std::vector<PairLabel>& labels);

// Label sets per starting height; single-integer systems use second = 0.
struct LabelSystem {
    std::function<std::vector<PairLabel>(int)> rise, fall, level;
};
LabelSystem first_label_system();
LabelSystem second_label_system();
LabelSystem unlabeled_zero_schroeder();

using StepWeight = std::function<Poly(Step, int, PairLabel)>;

// Brute force over all labeled Schroeder paths of length two_n.
Poly flajolet_weight_sum(const LabelSystem& sys, const StepWeight& w, int two_n, int cap = 10);
// T-fraction with alpha_k = A(k-1) B(k), delta_k = C(k-1) from summed label weights.
CFSpec flajolet_tfraction(const LabelSystem& sys, const StepWeight& w, int depth);

}  // namespace dperm
