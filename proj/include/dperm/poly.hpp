#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace dperm {

class VarTable {
public:
    int index(const std::string& name);  // registers on first use
    int find(const std::string& name) const;
    const std::string& name(int i) const { return names_.at(i); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> idx_;
};
using VarTablePtr = std::shared_ptr<VarTable>;
inline VarTablePtr make_vars() { return std::make_shared<VarTable>(); }

// Exponent vector with trailing zeros trimmed.
using Monomial = std::vector<std::uint16_t>;

struct GrLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int degree(const Monomial& m);
void trim(Monomial& m);

class Poly {
public:
    using Terms = std::map<Monomial, mpz_class, GrLex>;

    Poly() = default;
    Poly(long c);  // NOLINT: constants convert implicitly
    Poly(const mpz_class& c);
    static Poly var(const VarTablePtr& t, const std::string& name);
    static Poly monomial(const VarTablePtr& t, Monomial m, const mpz_class& c = 1);

    const VarTablePtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpz_class constant_term() const;
    int total_degree() const;
    int degree_in(int var) const;
    std::size_t size() const { return terms_.size(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned e) const;
    void add_term(const Monomial& m, const mpz_class& c);

    Poly substitute(int var, const Poly& value) const;
    Poly substitute(const std::string& var, const Poly& value) const;
    // Replace the listed variables by integers; the rest stay symbolic.
    Poly specialize(const std::map<int, mpz_class>& values) const;
    mpq_class eval(const std::map<int, mpq_class>& values) const;
    // Collect the coefficient of var^e.
    Poly coefficient(int var, int e) const;
    std::vector<int> used_vars() const;

    std::string str() const;

private:
    void adopt(const Poly& o);
    VarTablePtr vars_;
    Terms terms_;
};

// [n]_{p,q} = sum_{j<n} p^j q^{n-1-j}
Poly pq_integer(int n, const Poly& p, const Poly& q);

class Series {
public:
    Series() = default;
    Series(int order, const Poly& c0 = Poly());
    static Series t_power(int order, int k, const Poly& c = Poly(1));

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& operator[](int i) const { return c_.at(i); }
    Poly& operator[](int i) { return c_.at(i); }
    const std::vector<Poly>& coeffs() const { return c_; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Poly& c) const;
    Series shifted(int k) const;  // times t^k
    bool operator==(const Series& o) const { return c_ == o.c_; }

    // 1/s for s with constant term 1
    Series inverse_unit() const;

private:
    std::vector<Poly> c_;
};

std::string to_string(const mpq_class& q);

}  // namespace dperm
