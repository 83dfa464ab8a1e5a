#include "doctest.h"
#include "dperm/cfrac.hpp"
#include "gen.hpp"

using namespace dperm;

TEST_CASE("ring laws on random polynomials") {
    auto t = make_vars();
    std::vector<std::string> names = {"x", "y", "z"};
    std::mt19937_64 rng(7);
    for (int k = 0; k < 60; ++k) {
        Poly a = gen::poly(rng, t, names), b = gen::poly(rng, t, names), c = gen::poly(rng, t, names);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Poly());
        CHECK((a * b).total_degree() <= a.total_degree() + b.total_degree());
        std::map<int, mpq_class> at = {{t->find("x"), mpq_class(2, 3)}, {t->find("y"), -5}, {t->find("z"), mpq_class(7, 2)}};
        CHECK((a * b + c).eval(at) == a.eval(at) * b.eval(at) + c.eval(at));
        Poly s = a.substitute("x", b);
        CHECK(s.eval(at) == a.eval({{t->find("x"), b.eval(at)}, {t->find("y"), at[t->find("y")]},
                                    {t->find("z"), at[t->find("z")]}}));
    }
}

TEST_CASE("pow, coefficient and specialize") {
    auto t = make_vars();
    Poly x = Poly::var(t, "x"), y = Poly::var(t, "y");
    Poly p = (x + y).pow(4);
    CHECK(p.coefficient(t->find("x"), 2) == Poly(6) * y * y);
    CHECK(p.degree_in(t->find("y")) == 4);
    CHECK(p.specialize({{t->find("x"), 1}, {t->find("y"), 1}}) == Poly(16));
    CHECK(pq_integer(3, x, y) == x * x + x * y + y * y);
    CHECK(pq_integer(0, x, y) == Poly());
}

TEST_CASE("series inversion") {
    auto t = make_vars();
    Poly x = Poly::var(t, "x");
    Series s(8, Poly(1));
    s[1] = -x;
    Series inv = s.inverse_unit();
    for (int n = 0; n <= 8; ++n) CHECK(inv[n] == x.pow(n));
    Series one = s * inv;
    CHECK(one[0] == Poly(1));
    for (int n = 1; n <= 8; ++n) CHECK(one[n].is_zero());
}

TEST_CASE("S-fraction with unit coefficients gives Catalan numbers") {
    auto s = integer_coeffs(expand(CFSpec::S([](int) { return Poly(1); }, 10), 10));
    CHECK(s == std::vector<mpz_class>{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796});
}

TEST_CASE("J-fraction from moments inverts the expansion") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        JRational j;
        for (int i = 0; i < 4; ++i) {
            j.gamma.push_back(mpq_class(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5)));
            long b = static_cast<long>(rng() % 21) - 10;
            j.beta.push_back(mpq_class(b == 0 ? 1 : b, 1 + static_cast<long>(rng() % 5)));
        }
        for (auto& q : j.gamma) q.canonicalize();
        for (auto& q : j.beta) q.canonicalize();
        auto m = expand_j_rational(j, 9);
        JRational r = jfraction_from_moments(m, 4);
        for (int i = 0; i < 4; ++i) {
            CHECK(r.gamma[i] == j.gamma[i]);
            CHECK(r.beta[i] == j.beta[i]);
        }
    }
    CHECK_THROWS_AS(jfraction_from_moments({1, 0, 0, 1}, 1), std::domain_error);
    JRational done = jfraction_from_moments({1, 2, 4, 8}, 1);  // 1/(1-2t) terminates
    CHECK(done.gamma[0] == 2);
    CHECK(done.beta[0] == 0);
}

TEST_CASE("the classical sequences") {
    CHECK(genocchi(7) == std::vector<mpz_class>{1, 1, 3, 17, 155, 2073, 38227, 929569});
    CHECK(median_genocchi(7) == std::vector<mpz_class>{1, 1, 2, 8, 56, 608, 9440, 198272});
    CHECK(hflat(6) == std::vector<mpz_class>{1, 1, 5, 41, 493, 8161, 178469});
    CHECK(euler(9) == std::vector<mpz_class>{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936});
    CHECK(genocchi(9).back() == mpz_class("1109652905"));
    CHECK_THROWS(classical_sequence("fibonacci", 3));
}

TEST_CASE("Seidel triangle rows 0 to 11") {
    SeidelTriangle s = seidel(12);
    std::vector<std::vector<long>> want = {
        {1},
        {1},
        {1, 1},
        {2, 1},
        {2, 3, 3},
        {8, 6, 3},
        {8, 14, 17, 17},
        {56, 48, 34, 17},
        {56, 104, 138, 155, 155},
        {608, 552, 448, 310, 155},
        {608, 1160, 1608, 1918, 2073, 2073},
        {9440, 8832, 7672, 6064, 4146, 2073},
    };
    REQUIRE(s.size() == want.size());
    for (std::size_t n = 0; n < want.size(); ++n) {
        CAPTURE(n);
        REQUIRE(s[n].size() == want[n].size());
        mpz_class sum = 0;
        for (std::size_t k = 0; k < want[n].size(); ++k) {
            CHECK(s[n][k] == want[n][k]);
            sum += s[n][k];
        }
        if (n == 11) CHECK(sum == 38227);
    }
}

TEST_CASE("even contraction on a small example") {
    auto t = make_vars();
    std::vector<Poly> a, d;
    for (int k = 1; k <= 6; ++k) {
        a.push_back(Poly::var(t, "a" + std::to_string(k)));
        d.push_back(k % 2 ? Poly::var(t, "d" + std::to_string(k)) : Poly());
    }
    JCoeffs j = contract_even(a, d);
    CHECK(j.gamma[0] == a[0] + d[0]);
    CHECK(j.gamma[1] == a[1] + a[2] + d[2]);
    CHECK(j.beta[0] == a[0] * a[1]);
    CHECK(j.beta[1] == a[2] * a[3]);
}

TEST_CASE("augmenting then restricting is the identity") {
    std::mt19937_64 rng(3);
    std::vector<Poly> a, d;
    for (int k = 1; k <= 12; ++k) {
        a.push_back(Poly(static_cast<long>(rng() % 9) + 1));
        d.push_back(Poly(static_cast<long>(rng() % 9) - 4));
    }
    CFSpec t = CFSpec::T(a, d);
    CFSpec back = augment_restrict(augment_restrict(t, Direction::Augment), Direction::Restrict);
    Series l = expand(t, 9), r = expand(back, 9);
    for (int n = 0; n <= 9; ++n) CHECK(l[n] == r[n]);
}

TEST_CASE("expansion is insensitive to extra depth") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const int N = 4 + k % 9;
        std::vector<Poly> a, d, g, b;
        for (int i = 0; i < N + 3; ++i) {
            a.push_back(Poly(static_cast<long>(rng() % 15) - 7));
            d.push_back(Poly(static_cast<long>(rng() % 15) - 7));
            g.push_back(Poly(static_cast<long>(rng() % 15) - 7));
            b.push_back(Poly(static_cast<long>(rng() % 15) - 7));
        }
        for (const CFSpec& s : {CFSpec::S(a), CFSpec::T(a, d), CFSpec::J(g, b)}) {
            Series l = expand(s, N, N), r = expand(s, N, N + 3);
            for (int n = 0; n <= N; ++n) CHECK(l[n] == r[n]);
        }
    }
}
