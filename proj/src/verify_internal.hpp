#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dperm/cfrac.hpp"
#include "dperm/perm.hpp"
#include "dperm/stats.hpp"
#include "dperm/verify.hpp"

namespace dperm::detail {

struct Outcome {
    bool ok = true;
    std::string mode;
    std::vector<std::string> notes;

    void fail(std::string s) {
        ok = false;
        notes.push_back("FAIL " + std::move(s));
    }
    void note(std::string s) { notes.push_back(std::move(s)); }
    // returns cond, records a failure otherwise
    bool expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
        return cond;
    }
};

Poly V(const std::string& name);

using PermFn = std::function<Poly(const Permutation&, const std::vector<IndexStats>&, const StatProfile&)>;
Poly enumerate(int n, DClass c, const PermFn& fn);

// Every used variable gets its listed value, or rest when unlisted.
Poly set_vars(const Poly& p, const std::vector<std::pair<std::string, long>>& vals);
mpz_class value_at(const Poly& p, const std::vector<std::pair<std::string, long>>& vals, long rest);
Poly subst(Poly p, const std::vector<std::pair<std::string, Poly>>& s);

std::string seq_str(const std::vector<mpz_class>& v);
void expect_sequence(Outcome& out, const std::string& what, const std::vector<mpz_class>& got,
                     const std::vector<mpz_class>& want);
std::vector<mpz_class> ints(std::initializer_list<long> v);

// Names the first differing monomial of l and r with both coefficients.
bool same_poly(Outcome& out, const std::string& where, const Poly& l, const Poly& r);

CFSpec specialize_cf(const CFSpec& s, const std::map<int, mpz_class>& a);
std::vector<int> cf_vars(const CFSpec& s);

void check_sequences(const CheckOptions& o, int n_max, Outcome& out);
void check_class_table(const CheckOptions& o, int n_max, Outcome& out);
void check_cross_identities(const CheckOptions& o, int n_max, Outcome& out);
void check_transforms(const CheckOptions& o, int n_max, Outcome& out);
void check_bijections(const CheckOptions& o, int n_max, Outcome& out);
void check_flajolet(const CheckOptions& o, int n_max, Outcome& out);
void check_xylam(const CheckOptions& o, int n_max, Outcome& out);

}  // namespace dperm::detail
