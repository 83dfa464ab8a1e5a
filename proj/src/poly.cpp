#include "dperm/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dperm {

int VarTable::index(const std::string& name) {
    auto it = idx_.find(name);
    if (it != idx_.end()) return it->second;
    int i = static_cast<int>(names_.size());
    names_.push_back(name);
    idx_.emplace(name, i);
    return i;
}

int VarTable::find(const std::string& name) const {
    auto it = idx_.find(name);
    return it == idx_.end() ? -1 : it->second;
}

int degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

bool GrLex::operator()(const Monomial& a, const Monomial& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(const VarTablePtr& t, const std::string& name) {
    Monomial m(t->index(name) + 1, 0);
    m.back() = 1;
    return monomial(t, m);
}

Poly Poly::monomial(const VarTablePtr& t, Monomial m, const mpz_class& c) {
    Poly p;
    p.vars_ = t;
    trim(m);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

void Poly::adopt(const Poly& o) {
    if (!o.vars_) return;
    if (!vars_)
        vars_ = o.vars_;
    else if (vars_ != o.vars_)
        throw std::invalid_argument("mismatched VarTable");
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpz_class Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first); }

int Poly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_)
        if (var < static_cast<int>(m.size())) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.adopt(a);
    r.adopt(b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.is_constant()) {
        r.terms_ = b.terms_;
        const mpz_class& c = a.terms_.begin()->second;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }
    if (b.is_constant()) return b * a;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool Poly::operator==(const Poly& o) const {
    if (vars_ && o.vars_ && vars_ != o.vars_ && !(terms_.empty() && o.terms_.empty()))
        throw std::invalid_argument("mismatched VarTable");
    return terms_ == o.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    r.vars_ = vars_;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
    Poly r;
    r.vars_ = vars_;
    r.adopt(value);
    std::vector<Poly> powers{Poly(1)};
    for (const auto& [m, c] : terms_) {
        if (var >= static_cast<int>(m.size()) || m[var] == 0) {
            r.add_term(m, c);
            continue;
        }
        int e = m[var];
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest[var] = 0;
        trim(rest);
        Poly t = Poly::monomial(vars_, rest, c) * powers[e];
        r += t;
    }
    return r;
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
    if (!vars_) return *this;
    int i = vars_->find(var);
    if (i < 0) return *this;
    return substitute(i, value);
}

Poly Poly::specialize(const std::map<int, mpz_class>& values) const {
    Poly r;
    r.vars_ = vars_;
    std::map<std::pair<int, int>, mpz_class> cache;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        mpz_class coef = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = values.find(static_cast<int>(i));
            if (it == values.end()) continue;
            auto key = std::make_pair(static_cast<int>(i), static_cast<int>(m[i]));
            auto ct = cache.find(key);
            if (ct == cache.end()) {
                mpz_class v;
                mpz_pow_ui(v.get_mpz_t(), it->second.get_mpz_t(), m[i]);
                ct = cache.emplace(key, v).first;
            }
            coef *= ct->second;
            rest[i] = 0;
        }
        trim(rest);
        r.add_term(rest, coef);
    }
    return r;
}

mpq_class Poly::eval(const std::map<int, mpq_class>& values) const {
    mpq_class sum = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = values.find(static_cast<int>(i));
            if (it == values.end())
                throw std::invalid_argument("no value for variable " + (vars_ ? vars_->name(i) : std::to_string(i)));
            mpq_class pw = 1;
            for (int k = 0; k < m[i]; ++k) pw *= it->second;
            t *= pw;
        }
        sum += t;
    }
    return sum;
}

Poly Poly::coefficient(int var, int e) const {
    Poly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        int me = var < static_cast<int>(m.size()) ? m[var] : 0;
        if (me != e) continue;
        Monomial rest = m;
        if (var < static_cast<int>(rest.size())) rest[var] = 0;
        trim(rest);
        r.add_term(rest, c);
    }
    return r;
}

std::vector<int> Poly::used_vars() const {
    std::vector<char> used;
    for (const auto& [m, c] : terms_) {
        if (used.size() < m.size()) used.resize(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) used[i] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_ ? vars_->name(i) : "v" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

Poly pq_integer(int n, const Poly& p, const Poly& q) {
    if (n < 0) throw std::invalid_argument("negative n in pq_integer");
    Poly r;
    Poly qpow(1);
    for (int k = 1; k <= n; ++k) {
        r = p * r + qpow;
        qpow *= q;
    }
    return r;
}

Series::Series(int order, const Poly& c0) : c_(order + 1) { c_[0] = c0; }

Series Series::t_power(int order, int k, const Poly& c) {
    Series s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

Series& Series::operator+=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    const int N = a.order();
    Series r(N);
    for (int i = 0; i <= N; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series Series::scaled(const Poly& c) const {
    Series r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

Series Series::shifted(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Series Series::inverse_unit() const {
    if (c_[0] != Poly(1)) throw std::invalid_argument("inverse_unit: constant term is not 1");
    const int N = order();
    Series g(N, Poly(1));
    for (int m = 1; m <= N; ++m) {
        Poly acc;
        for (int j = 1; j <= m; ++j)
            if (!c_[j].is_zero() && !g.c_[m - j].is_zero()) acc -= c_[j] * g.c_[m - j];
        g.c_[m] = acc;
    }
    return g;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace dperm
