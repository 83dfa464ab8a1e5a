#include <set>

#include "doctest.h"
#include "dperm/families.hpp"
#include "dperm/paths.hpp"
#include "dperm/stats.hpp"
#include "dperm/verify.hpp"
#include "json.hpp"

using namespace dperm;

namespace {

bool has_detail(const CheckResult& r, const std::string& piece) {
    for (const auto& d : r.details)
        if (d.find(piece) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("every check passes at small n") {
    CheckOptions o;
    o.n_max = 3;
    o.seeds = 2;
    o.points = 5;
    for (const auto& c : check_catalog()) {
        CAPTURE(c.id);
        CheckResult r = run_check(c.id, o);
        CHECK(r.status == "pass");
        CHECK(r.n_max == 3);
    }
    CHECK_THROWS_AS(run_check("thm9.9"), std::invalid_argument);
    o.mode = "numeric";
    CHECK_THROWS_AS(run_check("thm3.2", o), std::invalid_argument);
}

TEST_CASE("first family at n=1 is ze zo + x1 y1") {
    const auto& t = verify_vars();
    Poly want = Poly::var(t, "ze") * Poly::var(t, "zo") + Poly::var(t, "x1") * Poly::var(t, "y1");
    CHECK(family_polynomial("Pn12", 1) == want);
    CHECK(family_polynomial("Pn12", 0) == Poly(1));
}

TEST_CASE("cycle counting: claimed odd coefficient fails at n=1") {
    const auto& t = verify_vars();
    Poly lam = Poly::var(t, "lambda");
    Poly p = family_polynomial("PnStarCyc", 1);
    for (const char* v : {"x", "u", "we"}) p = p.substitute(v, Poly(1));
    CHECK(p == lam * lam + lam);  // (lambda+k-1)(lambda+k) at k=1
    CHECK(p != lam + Poly(1));    // k(lambda+k) at k=1
    CHECK(has_detail(run_check("cor4.3"), "claimed form does not hold"));
}

TEST_CASE("p, q second T-fraction: claimed p+1 power fails at n=1") {
    CheckResult r = run_check("thm4.4");
    CHECK(r.status == "pass");
    CHECK(has_detail(r, "disagrees with enumeration at n=1"));
}

TEST_CASE("even record clause needs h_{i-1} = -1, not h_i = 0") {
    Permutation p = Permutation::parse("21");
    auto h = fz_path(p).heights();
    CHECK(h[2] == 0);
    CHECK(fz_labels(p, LabelVariant::Xi)[1] == 0);
    CHECK_FALSE(is_record(p, 2));
    CHECK(h[1] != -1);
    CHECK(has_detail(run_check("bijections", {2}), "h_i = 0 condition"));
}

TEST_CASE("x, y, lambda moments at x=y=lambda=1") {
    std::vector<mpq_class> m;
    const auto& t = verify_vars();
    std::map<int, mpq_class> one;
    for (const char* v : {"x", "y", "lambda"}) one[t->index(v)] = 1;
    for (int n = 0; n <= 5; ++n) m.push_back(family_polynomial("PnXYLam", n).eval(one));
    CHECK(m[2] == 8);
    JRational j = jfraction_from_moments(m, 2);
    CHECK(j.gamma[0] == 2);
    CHECK(j.beta[0] == 4);
    CHECK(j.gamma[1] == 8);
    CHECK(j.beta[1] == 36);
    CHECK(j.gamma[2] == 18);
}

TEST_CASE("assignments are distinct, in range and reproducible") {
    const auto& t = verify_vars();
    std::vector<int> used;
    for (const char* v : {"x1", "y1", "u1", "v1", "ze", "zo", "lambda"}) used.push_back(t->index(v));
    auto a = draw_assignment(t, used, {"lambda"}, 1729);
    CHECK(a.size() == 6);
    CHECK(a.count(t->index("lambda")) == 0);
    std::set<long> seen;
    for (const auto& [k, v] : a) {
        CHECK(v >= 2);
        CHECK(v <= 97);
        seen.insert(v.get_si());
    }
    CHECK(seen.size() == a.size());
    CHECK(draw_assignment(t, used, {"lambda"}, 1729) == a);
    CHECK(draw_assignment(t, used, {"lambda"}, 1730) != a);
}

TEST_CASE("json report fields") {
    CheckOptions o;
    o.timing = false;
    CheckResult r = run_check("sequences", o);
    auto j = nlohmann::ordered_json::parse(result_json(r));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check_id", "mode", "n_max", "seed", "status", "report_only", "details", "millis"});
    CHECK(j["millis"] == 0);
    CHECK(j["seed"] == 1729);
    CHECK(result_json(run_check("sequences", o)) == result_json(r));
    auto rep = nlohmann::json::parse(report_json({run_check("transforms", o), r}));
    CHECK(rep["checks"][0]["check_id"] == "sequences");
    CHECK(rep["seed"] == 1729);
}
