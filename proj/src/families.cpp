#include "dperm/families.hpp"

#include <stdexcept>

namespace dperm {

namespace {

const std::vector<std::string> kTwelve = {"x1", "x2", "y1", "y2", "u1", "u2", "v1", "v2", "we", "wo", "ze", "zo"};
const std::vector<std::string> kPQ = {"p-1", "p-2", "p+1", "p+2", "q-1", "q-2", "q+1", "q+2", "se", "so"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> twelve(const StatProfile& s) {
    return {s.eareccpeak, s.eareccdfall, s.ereccval, s.ereccdrise, s.nrcpeak,   s.nrcdfall,
            s.nrcval,     s.nrcdrise,    s.evennrfix, s.oddnrfix,  s.evenrar, s.oddrar};
}

// cdrise record status and crossings taken from the preimage
std::vector<int> twelve_hathat(const StatProfile& s) {
    auto e = twelve(s);
    e[3] = s.ereccdrise_p;
    e[7] = s.nrcdrise_p;
    return e;
}

std::vector<int> pq(const StatProfile& s) {
    return {s.lcrosscpeak, s.lcrosscdfall, s.ucrosscval,  s.ucrosscdrise, s.lnestcpeak,
            s.lnestcdfall, s.unestcval,    s.unestcdrise, s.psnest_e,     s.psnest_o};
}

std::vector<int> pq_hathat(const StatProfile& s) {
    auto e = pq(s);
    e[3] = s.ucrosscdrise_p;
    e[7] = s.unestcdrise_p;
    return e;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> star(const StatProfile& s) { return {s.earec(), s.nrcpeak + s.nrcdfall, s.evenfix()}; }

std::string fix_factor(const IndexStats& x) { return master_var(x.cls.even ? 'e' : 'f', x.psnest); }

std::vector<Family> make_table() {
    std::vector<Family> t;
    auto named = [&](std::string id, std::string summary, DClass c, std::vector<std::string> vars,
                     std::function<std::vector<int>(const PermData&)> ex) {
        Family f;
        f.id = std::move(id);
        f.summary = std::move(summary);
        f.cls = c;
        f.vars = std::move(vars);
        f.exponents = std::move(ex);
        t.push_back(std::move(f));
    };
    auto master = [&](std::string id, std::string summary, std::function<std::vector<std::string>(const PermData&)> fx) {
        Family f;
        f.id = std::move(id);
        f.summary = std::move(summary);
        f.factors = std::move(fx);
        t.push_back(std::move(f));
    };

    named("Pn12", "twelve-type record and cycle classification", DClass::All, kTwelve,
          [](const PermData& d) { return twelve(d.prof); });
    named("Pn22", "twelve types with refined crossings, nestings and pseudo-nestings", DClass::All, cat(kTwelve, kPQ),
          [](const PermData& d) { return join(twelve(d.prof), pq(d.prof)); });
    master("Qn", "per-index crossing and nesting indeterminates", [](const PermData& d) {
        std::vector<std::string> out;
        for (int i = 1; i <= d.perm.size(); ++i) {
            const IndexStats& x = d.idx[i];
            switch (x.cls.cycle) {
                case CycleType::CVal: out.push_back(master_var('a', x.ucross, x.unest)); break;
                case CycleType::CPeak: out.push_back(master_var('b', x.lcross, x.lnest)); break;
                case CycleType::CDFall: out.push_back(master_var('c', x.lcross, x.lnest)); break;
                case CycleType::CDRise: out.push_back(master_var('d', x.ucross, x.unest)); break;
                case CycleType::Fix: out.push_back(fix_factor(x)); break;
            }
        }
        return out;
    });
    master("QnPrime", "per-index indeterminates indexed by the variant crossing and nesting counts",
           [](const PermData& d) {
               std::vector<std::string> out;
               for (int i = 1; i <= d.perm.size(); ++i) {
                   const IndexStats& x = d.idx[i];
                   switch (x.cls.cycle) {
                       case CycleType::CVal: out.push_back(master_var('a', x.lcross_p, x.lnest_p)); break;
                       case CycleType::CPeak: out.push_back(master_var('b', x.ucross_p, x.unest_p)); break;
                       case CycleType::CDFall: out.push_back(master_var('c', x.lcross_p, x.lnest_p)); break;
                       case CycleType::CDRise: out.push_back(master_var('d', x.ucross_p, x.unest_p)); break;
                       case CycleType::Fix: out.push_back(fix_factor(x)); break;
                   }
               }
               return out;
           });
    named("PnPrime22", "record status and crossings read at the preimage", DClass::All, cat(kTwelve, kPQ),
          [](const PermData& d) {
              const StatProfile& s = d.prof;
              return std::vector<int>{s.ereccpeak_p,    s.eareccdfall_p,  s.eareccval_p,    s.ereccdrise_p,
                                      s.nrcpeak_p,      s.nrcdfall_p,     s.nrcval_p,       s.nrcdrise_p,
                                      s.evennrfix,      s.oddnrfix,       s.evenrar,        s.oddrar,
                                      s.ucrosscpeak_p,  s.lcrosscdfall_p, s.lcrosscval_p,   s.ucrosscdrise_p,
                                      s.unestcpeak_p,   s.lnestcdfall_p,  s.lnestcval_p,    s.unestcdrise_p,
                                      s.psnest_e,       s.psnest_o};
          });
    named("PnHat", "twelve types and cycle count", DClass::All, cat(kTwelve, {"lambda"}),
          [](const PermData& d) { return join(twelve(d.prof), {d.prof.cyc}); });
    named("PnHatHat", "twelve types with cdrise records read at the preimage, and cycle count", DClass::All,
          cat(kTwelve, {"lambda"}), [](const PermData& d) { return join(twelve_hathat(d.prof), {d.prof.cyc}); });
    named("PnTilde", "twelve types with cycle valleys split by cycle minimum", DClass::All, kTwelve,
          [](const PermData& d) {
              auto e = twelve(d.prof);
              e[2] = d.prof.minval;
              e[6] = d.prof.nminval;
              return e;
          });
    named("PnStar", "antirecords, non-record cpeak and cdfall, even fixed points", DClass::All, {"x", "u", "we"},
          [](const PermData& d) { return star(d.prof); });
    named("PnStarPQ", "PnStar with lower crossings and nestings", DClass::All, {"x", "u", "we", "p-", "q-"},
          [](const PermData& d) { return join(star(d.prof), {d.prof.lcross(), d.prof.lnest()}); });
    named("PnStarCyc", "PnStar with cycle count", DClass::All, {"x", "u", "we", "lambda"},
          [](const PermData& d) { return join(star(d.prof), {d.prof.cyc}); });
    named("PnStarCycPQ", "PnStar with lower crossings, nestings and cycle count", DClass::All,
          {"x", "u", "we", "p-", "q-", "lambda"},
          [](const PermData& d) { return join(star(d.prof), {d.prof.lcross(), d.prof.lnest(), d.prof.cyc}); });
    const std::vector<std::string> eight(kTwelve.begin(), kTwelve.begin() + 8);
    named("PDC", "eight record and cycle types on D-cycles", DClass::Cycle, eight, [](const PermData& d) {
        auto e = twelve(d.prof);
        e.resize(8);
        return e;
    });
    named("PDCHatHat", "eight types on D-cycles with cdrise records read at the preimage", DClass::Cycle, eight,
          [](const PermData& d) {
              auto e = twelve_hathat(d.prof);
              e.resize(8);
              return e;
          });
    std::vector<std::string> pq8(kPQ.begin(), kPQ.begin() + 8);
    named("PDCHatHatPQ", "PDCHatHat with refined crossings and nestings", DClass::Cycle, cat(eight, pq8),
          [](const PermData& d) {
              auto e = twelve_hathat(d.prof);
              e.resize(8);
              auto c = pq_hathat(d.prof);
              c.resize(8);
              return join(e, c);
          });
    named("PnHatHatPQ", "PnHatHat with refined crossings, nestings and pseudo-nestings", DClass::All,
          cat(cat(kTwelve, kPQ), {"lambda"}),
          [](const PermData& d) { return join(join(twelve_hathat(d.prof), pq_hathat(d.prof)), {d.prof.cyc}); });
    master("QHatHat", "per-index indeterminates with cycle count", [](const PermData& d) {
        std::vector<std::string> out;
        for (int i = 1; i <= d.perm.size(); ++i) {
            const IndexStats& x = d.idx[i];
            switch (x.cls.cycle) {
                case CycleType::CVal: out.push_back(master_var('a', x.ucross + x.unest)); break;
                case CycleType::CPeak: out.push_back(master_var('b', x.lcross, x.lnest)); break;
                case CycleType::CDFall: out.push_back(master_var('c', x.lcross, x.lnest)); break;
                case CycleType::CDRise: out.push_back(master_var('d', x.ucross_p, x.unest_p)); break;
                case CycleType::Fix: out.push_back(fix_factor(x)); break;
            }
        }
        for (int c = 0; c < d.prof.cyc; ++c) out.push_back("lambda");
        return out;
    });
    named("PnXYLam", "antirecords, exclusive records and cycles", DClass::All, {"x", "y", "lambda"},
          [](const PermData& d) { return std::vector<int>{d.prof.arec(), d.prof.erec(), d.prof.cyc}; });
    return t;
}

Monomial named_monomial(const std::vector<int>& ids, const std::vector<int>& ex) {
    int top = 0;
    for (int i : ids) top = std::max(top, i + 1);
    Monomial m(top, 0);
    for (std::size_t k = 0; k < ids.size(); ++k) m[ids[k]] = static_cast<std::uint16_t>(ex[k]);
    trim(m);
    return m;
}

Monomial master_monomial(const VarTablePtr& vars, const std::vector<std::string>& names) {
    Monomial m;
    for (const auto& s : names) {
        int i = vars->index(s);
        if (static_cast<int>(m.size()) <= i) m.resize(i + 1, 0);
        m[i]++;
    }
    return m;
}

}  // namespace

const std::vector<Family>& family_table() {
    static const std::vector<Family> t = make_table();
    return t;
}

const Family& family(const std::string& id) {
    for (const auto& f : family_table())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown family: " + id);
}

std::string master_var(char family, int l, int m) {
    return std::string(1, family) + "[" + std::to_string(l) + "," + std::to_string(m) + "]";
}

std::string master_var(char family, int l) { return std::string(1, family) + "[" + std::to_string(l) + "]"; }

std::vector<std::string> master_vars(const std::string& family_id, int n) {
    std::vector<std::string> out;
    const bool hathat = family_id == "QHatHat";
    if (!hathat && family_id != "Qn" && family_id != "QnPrime")
        throw std::invalid_argument("not a master family: " + family_id);
    for (char c : std::string("abcd")) {
        for (int s = 0; s < n; ++s) {
            if (hathat && c == 'a') {
                out.push_back(master_var('a', s));
                continue;
            }
            for (int l = s; l >= 0; --l) out.push_back(master_var(c, l, s - l));
        }
    }
    for (char c : std::string("ef"))
        for (int l = 0; l <= n; ++l) out.push_back(master_var(c, l));
    if (hathat) out.push_back("lambda");
    return out;
}

Poly build_polynomial(const Family& f, int n, const VarTablePtr& vars) {
    std::vector<int> ids;
    for (const auto& v : f.vars) ids.push_back(vars->index(v));
    Poly out = Poly::monomial(vars, {}, 0);
    for_each_d_permutation(n, f.cls, [&](const Permutation& p) {
        auto idx = index_stats(p);
        auto prof = stat_profile(p, idx);
        PermData d{p, idx, prof};
        out.add_term(f.master() ? master_monomial(vars, f.factors(d)) : named_monomial(ids, f.exponents(d)), 1);
    });
    return out;
}

Poly monomial_of(const Family& f, const Permutation& p, const VarTablePtr& vars) {
    auto idx = index_stats(p);
    auto prof = stat_profile(p, idx);
    PermData d{p, idx, prof};
    if (f.master()) return Poly::monomial(vars, master_monomial(vars, f.factors(d)));
    std::vector<int> ids;
    for (const auto& v : f.vars) ids.push_back(vars->index(v));
    return Poly::monomial(vars, named_monomial(ids, f.exponents(d)));
}

}  // namespace dperm
