#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dperm/perm.hpp"
#include "dperm/poly.hpp"
#include "dperm/stats.hpp"

namespace dperm {

// Everything a weight rule may look at for one permutation.
struct PermData {
    const Permutation& perm;
    const std::vector<IndexStats>& idx;  // idx[i] describes index i, idx[0] unused
    const StatProfile& prof;
};

struct Family {
    std::string id;
    std::string summary;
    DClass cls = DClass::All;
    // Named families: one exponent per entry of vars.
    std::vector<std::string> vars;
    std::function<std::vector<int>(const PermData&)> exponents;
    // Master families: the multiset of indeterminates attached to the indices.
    std::function<std::vector<std::string>(const PermData&)> factors;
    bool master() const { return static_cast<bool>(factors); }
};

const std::vector<Family>& family_table();
const Family& family(const std::string& id);  // throws std::invalid_argument

// Master indeterminates by name: a[l,m], b[l,m], ..., e[l], f[l], and the one-index a[l].
std::string master_var(char family, int l, int m);
std::string master_var(char family, int l);
// Names used by a master family at size <= n, in a stable order.
std::vector<std::string> master_vars(const std::string& family_id, int n);

Poly build_polynomial(const Family& f, int n, const VarTablePtr& vars);
// Weight of a single permutation.
Poly monomial_of(const Family& f, const Permutation& p, const VarTablePtr& vars);

}  // namespace dperm
