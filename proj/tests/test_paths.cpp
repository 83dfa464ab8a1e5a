#include "doctest.h"
#include "dperm/paths.hpp"
#include "dperm/stats.hpp"
#include "gen.hpp"

using namespace dperm;

namespace {

template <class T>
std::string joined(const std::vector<T>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

const char* kExample = "7 1 9 2 5 4 8 6 10 3 11 12 14 13";

}  // namespace

TEST_CASE("worked example: path, heights and labels") {
    Permutation p = Permutation::parse(kExample);
    Path path = fz_path(p);
    CHECK(path.str() == "UUUUDUDDDDDUUD");
    CHECK(joined(path.heights()) == "0 1 2 3 4 3 4 3 2 1 0 -1 0 1 0");
    CHECK(psi(path).str() == "UUUUDUDDDDLUD");
    CHECK(joined(fz_labels(p, LabelVariant::Xi)) == "0 0 0 0 2 1 1 1 0 0 0 0 0 0");
    CHECK(joined(fz_labels(p, LabelVariant::XiHat)) == "0 0 0 1 2 1 0 1 0 0 0 0 0 0");
    std::vector<PairLabel> want = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}, {0, 1}, {0, 0},
                                   {1, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    CHECK(biane_labels(p) == want);
    BianeHistory h = biane_inverse(path, want);
    CHECK(h.perm == p);
    CHECK(h.cycles == 6);
}

TEST_CASE("roundtrips on random D-permutations up to n=8") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 400; ++t) {
        Permutation p = gen::d_perm(rng, 1 + t % 8);
        CAPTURE(p.str());
        Path path = fz_path(p);
        REQUIRE(path.valid());
        CHECK(psi_inverse(psi(path)) == path);
        for (auto v : {LabelVariant::Xi, LabelVariant::XiHat}) {
            auto lab = fz_labels(p, v);
            for (int i = 1; i <= p.size(); ++i) CHECK(lab[i - 1] <= fz_label_bound(path, i));
            CHECK(fz_inverse(path, lab, v) == p);
        }
        auto bl = biane_labels(p);
        BianeHistory h = biane_inverse(path, bl);
        CHECK(h.perm == p);
        CHECK(h.cycles == cycle_count(p));
        auto closers = h.closers;
        std::sort(closers.begin(), closers.end());
        CHECK(closers == cycle_closers(p));
    }
}

TEST_CASE("label sequences out of range are rejected") {
    Permutation p = Permutation::parse("2143");
    Path path = fz_path(p);
    auto lab = fz_labels(p, LabelVariant::Xi);
    lab[1] = 5;
    CHECK_THROWS(fz_inverse(path, lab, LabelVariant::Xi));
    Path bad;
    bad.steps = {Step::Fall, Step::Fall};
    CHECK_FALSE(bad.valid());
    CHECK_THROWS(psi(bad));
}

TEST_CASE("labeled path sums at unit weights") {
    StepWeight one = [](Step, int, PairLabel) { return Poly(1); };
    CHECK(flajolet_weight_sum(first_label_system(), one, 0) == Poly(1));
    CHECK(flajolet_weight_sum(first_label_system(), one, 4) == Poly(8));
    CHECK(flajolet_weight_sum(second_label_system(), one, 4) == Poly(8));
    CHECK(flajolet_weight_sum(unlabeled_zero_schroeder(), one, 6) == Poly(14));
}
