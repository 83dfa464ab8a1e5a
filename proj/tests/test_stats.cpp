#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "dperm/perm.hpp"
#include "dperm/stats.hpp"
#include "gen.hpp"

using namespace dperm;

namespace {

// Brute force: every permutation of [2n], keep the D-permutations.
std::vector<std::vector<int>> brute_d_perms(int n) {
    std::vector<int> w(2 * n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 1; i <= 2 * n && ok; ++i) ok = i % 2 ? w[i - 1] >= i : w[i - 1] <= i;
        if (ok) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

bool rec_oracle(const std::vector<int>& w, int i) {
    for (int j = 1; j < i; ++j)
        if (w[j - 1] > w[i - 1]) return false;
    return true;
}

bool arec_oracle(const std::vector<int>& w, int i) {
    for (int j = i + 1; j <= static_cast<int>(w.size()); ++j)
        if (w[j - 1] < w[i - 1]) return false;
    return true;
}

int cycles_oracle(const std::vector<int>& w) {
    std::vector<char> seen(w.size() + 1, 0);
    int c = 0;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = w[j - 1]) seen[j] = 1;
    }
    return c;
}

// crossing and nesting counts by scanning every quadruple i<j<k<l
struct Quad {
    std::vector<int> ucross, unest, lcross, lnest, ucross_p, unest_p, lcross_p, lnest_p, psnest;
};

Quad quad_oracle(const std::vector<int>& w) {
    const int N = static_cast<int>(w.size());
    auto s = [&](int i) { return w[i - 1]; };
    Quad q;
    for (auto* v : {&q.ucross, &q.unest, &q.lcross, &q.lnest, &q.ucross_p, &q.unest_p, &q.lcross_p, &q.lnest_p, &q.psnest})
        v->assign(N + 1, 0);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k)
                for (int l = k + 1; l <= N; ++l) {
                    if (s(i) == k && s(j) == l) ++q.ucross[j], ++q.ucross_p[k];
                    if (s(j) == k && s(i) == l) ++q.unest[j], ++q.unest_p[k];
                    if (s(k) == i && s(l) == j) ++q.lcross[k], ++q.lcross_p[j];
                    if (s(l) == i && s(k) == j) ++q.lnest[k], ++q.lnest_p[j];
                }
    for (int j = 1; j <= N; ++j) {
        if (s(j) != j) continue;
        for (int i = 1; i < j; ++i) q.psnest[j] += s(i) > j;
    }
    return q;
}

CycleType type_oracle(const std::vector<int>& w, int i) {
    int pre = static_cast<int>(std::find(w.begin(), w.end(), i) - w.begin()) + 1, post = w[i - 1];
    if (pre == i) return CycleType::Fix;
    if (pre > i && post > i) return CycleType::CVal;
    if (pre < i && post < i) return CycleType::CPeak;
    if (pre < i) return CycleType::CDRise;
    return CycleType::CDFall;
}

void compare_with_oracle(const Permutation& p) {
    auto w = p.one_line();
    const int N = p.size();
    auto idx = index_stats(p);
    Quad q = quad_oracle(w);
    for (int i = 1; i <= N; ++i) {
        CAPTURE(p.str());
        CAPTURE(i);
        const auto& x = idx[i];
        CHECK(x.cls.cycle == type_oracle(w, i));
        CHECK(x.cls.even == (i % 2 == 0));
        bool r = rec_oracle(w, i), a = arec_oracle(w, i);
        CHECK(is_record(p, i) == r);
        CHECK(is_antirecord(p, i) == a);
        RecordType want = r && a ? RecordType::Rar : r ? RecordType::Erec : a ? RecordType::Earec : RecordType::Nrar;
        CHECK(x.cls.record == want);
        CHECK(x.ucross == q.ucross[i]);
        CHECK(x.unest == q.unest[i]);
        CHECK(x.lcross == q.lcross[i]);
        CHECK(x.lnest == q.lnest[i]);
        CHECK(x.ucross_p == q.ucross_p[i]);
        CHECK(x.unest_p == q.unest_p[i]);
        CHECK(x.lcross_p == q.lcross_p[i]);
        CHECK(x.lnest_p == q.lnest_p[i]);
        CHECK(x.psnest == q.psnest[i]);
    }
    StatProfile pr = stat_profile(p);
    CHECK(pr.cyc == cycles_oracle(w));
    CHECK(cycle_count(p) == cycles_oracle(w));
    int inv = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) inv += w[i] > w[j];
    CHECK(pr.inv == inv);
    int uc = 0, un = 0, lc = 0, ln = 0;
    for (int i = 1; i <= N; ++i) uc += q.ucross[i], un += q.unest[i], lc += q.lcross[i], ln += q.lnest[i];
    CHECK(pr.ucross() == uc);
    CHECK(pr.unest() == un);
    CHECK(pr.lcross() == lc);
    CHECK(pr.lnest() == ln);
    PatternTotals t = pattern_totals_fast(p);
    CHECK(t.ucross == uc);
    CHECK(t.unest == un);
    CHECK(t.lcross == lc);
    CHECK(t.lnest == ln);
    // nestings: the primed version just relabels by the image
    for (int i = 1; i <= N; ++i) {
        CHECK(q.unest_p[i] == q.unest[p.inv(i)]);
        CHECK(q.lnest_p[i] == q.lnest[p.inv(i)]);
    }
}

}  // namespace

TEST_CASE("enumeration matches brute force over all permutations") {
    for (int n = 0; n <= 4; ++n) {
        auto want = brute_d_perms(n);
        std::vector<std::vector<int>> got;
        for (const auto& p : d_permutations(n)) got.push_back(p.one_line());
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    }
}

TEST_CASE("class filters match their definitions") {
    for (int n = 0; n <= 4; ++n) {
        std::map<DClass, long> cnt;
        for (const auto& w : brute_d_perms(n)) {
            bool even_fix = false, odd_fix = false, rar_fix = false;
            for (int i = 1; i <= 2 * n; ++i) {
                if (w[i - 1] != i) continue;
                (i % 2 ? odd_fix : even_fix) = true;
                rar_fix |= rec_oracle(w, i) && arec_oracle(w, i);
            }
            ++cnt[DClass::All];
            if (!even_fix) ++cnt[DClass::ESemi];
            if (!odd_fix) ++cnt[DClass::OSemi];
            if (!even_fix && !odd_fix) ++cnt[DClass::Derangement];
            if (cycles_oracle(w) == 1) ++cnt[DClass::Cycle];
            if (!rar_fix) ++cnt[DClass::Pure];
            Permutation p(w);
            CHECK(in_class(p, DClass::ESemi) == !even_fix);
            CHECK(in_class(p, DClass::Pure) == !rar_fix);
        }
        ClassCounts c = class_counts(n);
        CHECK(c.d == cnt[DClass::All]);
        CHECK(c.de == cnt[DClass::ESemi]);
        CHECK(c.d_o == cnt[DClass::OSemi]);
        CHECK(c.deo == cnt[DClass::Derangement]);
        CHECK(c.dc == (n == 0 ? 0 : cnt[DClass::Cycle]));
        CHECK(c.dpure == cnt[DClass::Pure]);
        CHECK(c.de_union_do == cnt[DClass::ESemi] + cnt[DClass::OSemi] - cnt[DClass::Derangement]);
    }
}

TEST_CASE("index statistics agree with the quadruple scan, exhaustive n<=4") {
    for (int n = 0; n <= 4; ++n)
        for_each_d_permutation(n, DClass::All, [](const Permutation& p) { compare_with_oracle(p); });
}

TEST_CASE("index statistics agree with the quadruple scan, random n<=8") {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 300; ++t) compare_with_oracle(gen::d_perm(rng, 5 + t % 4));
}

TEST_CASE("wide permutations print with spaces") {
    Permutation p = Permutation::parse("7 1 9 2 5 4 8 6 10 3 11 12 14 13");
    CHECK(p.str() == "7 1 9 2 5 4 8 6 10 3 11 12 14 13");
    CHECK(Permutation::parse("2143").str() == "2143");
    CHECK(is_d_permutation(p));
    CHECK(is_d_permutation(Permutation::parse("1243")));
    CHECK_FALSE(is_d_permutation(Permutation::parse("1324")));
    CHECK_THROWS(Permutation::parse("12a"));
}

TEST_CASE("cycle closers are the cycle maxima") {
    Permutation p = Permutation::parse("7 1 9 2 5 4 8 6 10 3 11 12 14 13");
    // (1 7 8 6 4 2)(3 9 10)(5)(11)(12)(13 14)
    CHECK(cycle_closers(p) == std::vector<int>{8, 10, 14});
    CHECK(cycle_count(p) == 6);
}
