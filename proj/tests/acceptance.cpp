// One line per acceptance criterion: status, the checks behind it, wall time against its limit.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "dperm/verify.hpp"

using namespace dperm;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> checks;
    double limit_s;
    int n_max = -1;
};

}  // namespace

int main(int argc, char** argv) {
    bool big = argc > 1 && std::strcmp(argv[1], "--n6") == 0;
    std::vector<Criterion> cs = {
        {1, "sequence reproduction", {"sequences"}, 2},
        {2, "class-count table", {"class-table"}, 30},
        {3, "cross-identities", {"cross-identities"}, 1},
        {4, "first T-fraction, 12 variables", {"thm3.2"}, 180},
        {5, "p,q and master T-fractions", {"thm3.4", "thm3.9", "thm3.11", "thm3.12"}, 300},
        {6, "first-family corollaries", {"cor3.3", "cor3.4", "prop3.5", "cor3.6", "cor3.7", "cor3.8"}, 120},
        {7, "second-family theorems and corollaries",
         {"thm4.2", "cor4.3", "thm4.4", "cor4.6", "cor4.7", "cor4.8", "cor4.9", "thm4.6"}, 300},
        {8, "conjectures (report-only)", {"conj4.1", "conj4.1prime", "conj4.1bisbis", "conj4.5"}, 600, big ? 6 : -1},
        {9, "bijections and lemma suites", {"bijections"}, 120},
        {10, "labeled Schroeder paths", {"flajolet"}, 60},
        {11, "x, y, lambda J-fraction data", {"xylam"}, 60},
        {12, "transform identities", {"transforms"}, 10},
    };
    int failed = 0;
    for (const auto& c : cs) {
        CheckOptions o;
        o.n_max = c.n_max;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> bad;
        for (const auto& id : c.checks) {
            CheckResult r = run_check(id, o);
            if (r.status != "pass") {
                bad.push_back(id + ":" + r.status);
                for (const auto& d : r.details)
                    if (d.rfind("FAIL", 0) == 0) std::printf("    %s %s\n", id.c_str(), d.c_str());
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = bad.empty() && secs < c.limit_s;
        std::string why;
        for (const auto& b : bad) why += " " + b;
        if (secs >= c.limit_s) why += " over time limit";
        std::printf("criterion %2d %s  %-40s %8.3f s (limit %g s)%s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                    c.limit_s, why.c_str());
        failed += !ok;
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(cs.size()) - failed, cs.size());
    return failed ? 1 : 0;
}
