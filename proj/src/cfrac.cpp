#include "dperm/cfrac.hpp"

#include <stdexcept>

namespace dperm {

CFSpec CFSpec::S(std::vector<Poly> a) {
    CFSpec s;
    s.kind = CFKind::S;
    s.alpha = std::move(a);
    return s;
}

CFSpec CFSpec::T(std::vector<Poly> a, std::vector<Poly> d) {
    CFSpec s;
    s.kind = CFKind::T;
    s.alpha = std::move(a);
    s.delta = std::move(d);
    return s;
}

CFSpec CFSpec::J(std::vector<Poly> g, std::vector<Poly> b) {
    CFSpec s;
    s.kind = CFKind::J;
    s.gamma = std::move(g);
    s.beta = std::move(b);
    return s;
}

CFSpec CFSpec::S(const std::function<Poly(int)>& a, int depth) {
    std::vector<Poly> v;
    for (int k = 1; k <= depth; ++k) v.push_back(a(k));
    return S(std::move(v));
}

CFSpec CFSpec::T(const std::function<Poly(int)>& a, const std::function<Poly(int)>& d, int depth) {
    std::vector<Poly> va, vd;
    for (int k = 1; k <= depth; ++k) {
        va.push_back(a(k));
        vd.push_back(d(k));
    }
    return T(std::move(va), std::move(vd));
}

CFSpec CFSpec::J(const std::function<Poly(int)>& g, const std::function<Poly(int)>& b, int depth) {
    std::vector<Poly> vg, vb;
    for (int k = 0; k < depth; ++k) vg.push_back(g(k));
    for (int k = 1; k <= depth; ++k) vb.push_back(b(k));
    return J(std::move(vg), std::move(vb));
}

int CFSpec::depth() const {
    switch (kind) {
        case CFKind::S: return static_cast<int>(alpha.size());
        case CFKind::T: return static_cast<int>(std::min(alpha.size(), delta.size()));
        case CFKind::J: return static_cast<int>(std::min(gamma.size(), beta.size()));
    }
    return 0;
}

Series expand(const CFSpec& spec, int order, int depth) {
    if (depth < 0) depth = order;
    if (spec.depth() < depth)
        throw std::invalid_argument("continued fraction has depth " + std::to_string(spec.depth()) + ", need " +
                                    std::to_string(depth));
    Series f(order, Poly(1));
    for (int k = depth; k >= 1; --k) {
        Series den(order, Poly(1));
        if (spec.kind == CFKind::J) {
            den -= Series::t_power(order, 1, spec.gamma[k - 1]);
            den -= f.shifted(2).scaled(spec.beta[k - 1]);
        } else {
            if (spec.kind == CFKind::T) den -= Series::t_power(order, 1, spec.delta[k - 1]);
            den -= f.shifted(1).scaled(spec.alpha[k - 1]);
        }
        f = den.inverse_unit();
    }
    return f;
}

static const Poly& at(const std::vector<Poly>& v, int k1) {
    static const Poly zero;
    return k1 - 1 < static_cast<int>(v.size()) ? v[k1 - 1] : zero;
}

JCoeffs contract_even(const std::vector<Poly>& alpha, const std::vector<Poly>& delta) {
    for (std::size_t i = 1; i < delta.size(); i += 2)
        if (!delta[i].is_zero()) throw std::invalid_argument("contract_even: even delta must vanish");
    JCoeffs j;
    const int K = static_cast<int>(alpha.size());
    j.gamma.push_back(at(alpha, 1) + at(delta, 1));
    for (int n = 1; 2 * n + 1 <= K; ++n) {
        j.gamma.push_back(at(alpha, 2 * n) + at(alpha, 2 * n + 1) + at(delta, 2 * n + 1));
        j.beta.push_back(at(alpha, 2 * n - 1) * at(alpha, 2 * n));
    }
    return j;
}

OddContraction contract_odd(const std::vector<Poly>& alpha, const std::vector<Poly>& delta) {
    for (std::size_t i = 0; i < delta.size(); i += 2)
        if (!delta[i].is_zero()) throw std::invalid_argument("contract_odd: odd delta must vanish");
    OddContraction r;
    r.lead = at(alpha, 1);
    const int K = static_cast<int>(alpha.size());
    for (int n = 0; 2 * n + 2 <= K; ++n) {
        r.j.gamma.push_back(at(alpha, 2 * n + 1) + at(alpha, 2 * n + 2) + at(delta, 2 * n + 2));
        if (n >= 1) r.j.beta.push_back(at(alpha, 2 * n) * at(alpha, 2 * n + 1));
    }
    return r;
}

CFSpec shift_even_delta(const CFSpec& t) {
    for (std::size_t i = 0; i < t.delta.size(); i += 2)
        if (!t.delta[i].is_zero()) throw std::invalid_argument("shift_even_delta: odd delta must vanish");
    const int K = static_cast<int>(t.alpha.size());
    std::vector<Poly> a, d;
    for (int k = 1; k + 1 <= K; ++k) a.push_back(t.alpha[k]);
    d.assign(a.size(), Poly());
    if (!d.empty()) d[0] = at(t.alpha, 1) + at(t.delta, 2);
    for (int n = 1; 2 * n + 1 <= static_cast<int>(d.size()); ++n) d[2 * n] = at(t.delta, 2 * n + 2);
    return CFSpec::T(a, d);
}

CFSpec augment_restrict(const CFSpec& t, Direction dir) {
    if (t.kind == CFKind::J) throw std::invalid_argument("augment_restrict needs an S or T fraction");
    std::vector<Poly> delta = t.delta;
    delta.resize(t.alpha.size());
    const int K = static_cast<int>(t.alpha.size());
    std::vector<Poly> a, d;
    if (dir == Direction::Augment) {
        a.push_back(delta.empty() ? Poly() : delta[0]);
        d.push_back(Poly());
        for (int n = 2; n <= K + 1; ++n) {
            a.push_back(t.alpha[n - 2]);
            d.push_back(n >= 3 ? delta[n - 2] : Poly());
        }
    } else {
        if (!at(delta, 1).is_zero() || !at(delta, 2).is_zero())
            throw std::invalid_argument("restrict: delta_1 and delta_2 must vanish");
        for (int n = 1; n + 1 <= K; ++n) {
            a.push_back(t.alpha[n]);
            d.push_back(n == 1 ? t.alpha[0] : delta[n]);
        }
    }
    return CFSpec::T(a, d);
}

namespace {

using QSeries = std::vector<mpq_class>;

QSeries q_inverse(const QSeries& s) {
    QSeries g(s.size());
    g[0] = 1 / s[0];
    for (std::size_t m = 1; m < s.size(); ++m) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= m; ++j) acc += s[j] * g[m - j];
        g[m] = -acc / s[0];
    }
    return g;
}

}  // namespace

JRational jfraction_from_moments(const std::vector<mpq_class>& m, int depth) {
    if (m.empty() || m[0] != 1) throw std::invalid_argument("moments must start with 1");
    if (static_cast<int>(m.size()) < 2 * depth + 2)
        throw std::invalid_argument("need " + std::to_string(2 * depth + 2) + " moments");
    JRational r;
    QSeries f = m;
    bool terminated = false;
    for (int k = 0; k <= depth; ++k) {
        if (terminated) {
            r.gamma.push_back(0);
            if (k < depth) r.beta.push_back(0);
            continue;
        }
        mpq_class gk = f.size() > 1 ? f[1] : mpq_class(0);
        r.gamma.push_back(gk);
        if (k == depth) break;
        QSeries inv = q_inverse(f);
        // g = 1 - gamma t - 1/f, starting at t^2
        QSeries g(f.size(), 0);
        for (std::size_t i = 2; i < f.size(); ++i) g[i] = -inv[i];
        bool all_zero = true;
        for (auto& x : g)
            if (x != 0) all_zero = false;
        if (all_zero) {
            terminated = true;
            r.beta.push_back(0);
            continue;
        }
        if (g[2] == 0) throw std::domain_error("J-fraction undefined at this depth");
        mpq_class b = g[2];
        r.beta.push_back(b);
        QSeries next(f.size() - 2);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = g[i + 2] / b;
        f = next;
    }
    return r;
}

std::vector<mpq_class> expand_j_rational(const JRational& j, int order) {
    const int depth = static_cast<int>(j.gamma.size());
    QSeries f(order + 1, 0);
    f[0] = 1;
    for (int k = depth; k >= 1; --k) {
        QSeries den(order + 1, 0);
        den[0] = 1;
        if (order >= 1) den[1] -= j.gamma[k - 1];
        mpq_class b = k - 1 < static_cast<int>(j.beta.size()) ? j.beta[k - 1] : mpq_class(0);
        for (int i = 0; i + 2 <= order; ++i) den[i + 2] -= b * f[i];
        f = q_inverse(den);
    }
    return f;
}

std::vector<mpz_class> integer_coeffs(const Series& s) {
    std::vector<mpz_class> out;
    for (int i = 0; i <= s.order(); ++i) {
        if (!s[i].is_constant()) throw std::invalid_argument("series coefficient is not an integer");
        out.push_back(s[i].constant_term());
    }
    return out;
}

static std::vector<mpz_class> s_fraction_ints(const std::function<long(int)>& a, int N) {
    return integer_coeffs(expand(CFSpec::S([&](int k) { return Poly(a(k)); }, N), N));
}

std::vector<mpz_class> genocchi(int N) {
    return s_fraction_ints([](int n) { long k = (n + 1) / 2; return n % 2 ? k * k : k * (k + 1); }, N);
}

std::vector<mpz_class> median_genocchi(int N) {
    return s_fraction_ints([](int n) { long k = (n + 1) / 2; return k * k; }, N);
}

std::vector<mpz_class> hflat(int N) {
    return s_fraction_ints([](int n) { long k = (n + 1) / 2; return n % 2 ? k * k : (k + 1) * (k + 1); }, N);
}

std::vector<mpz_class> euler(int N) {
    int half = N / 2 + 1;
    auto sec = s_fraction_ints([](int n) { return long(n) * n; }, half);
    auto tan = s_fraction_ints([](int n) { return long(n) * (n + 1); }, half);
    std::vector<mpz_class> out(N + 1);
    for (int i = 0; i <= N; ++i) out[i] = i % 2 ? tan[i / 2] : sec[i / 2];
    return out;
}

std::vector<mpz_class> augmented_euler(int N) {
    auto e = euler(N);
    for (int i = 0; i <= N; ++i) e[i] *= i + 1;
    return e;
}

std::vector<mpz_class> classical_sequence(const std::string& name, int N) {
    if (N < 0) throw std::invalid_argument("negative length");
    if (name == "genocchi") return genocchi(N);
    if (name == "median") return median_genocchi(N);
    if (name == "hflat") return hflat(N);
    if (name == "euler") return euler(N);
    if (name == "augmented_euler") return augmented_euler(N);
    throw std::invalid_argument("unknown sequence: " + name);
}

SeidelTriangle seidel(int rows) {
    SeidelTriangle s;
    s.push_back({1});
    for (int n = 1; n < rows; ++n) {
        const auto& prev = s.back();
        std::vector<mpz_class> row(n / 2 + 1, 0);
        auto pv = [&](int j) { return j < static_cast<int>(prev.size()) ? prev[j] : mpz_class(0); };
        if (n % 2 == 0) {
            mpz_class acc = 0;
            for (int k = 0; k <= n / 2; ++k) {
                acc += pv(k);
                row[k] = acc;
            }
        } else {
            mpz_class acc = 0;
            for (int k = n / 2; k >= 0; --k) {
                acc += pv(k);
                row[k] = acc;
            }
        }
        s.push_back(row);
    }
    return s;
}

}  // namespace dperm
