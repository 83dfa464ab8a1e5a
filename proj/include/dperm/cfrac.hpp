#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dperm/poly.hpp"

namespace dperm {

enum class CFKind { S, J, T };

// alpha[k-1] = alpha_k, delta[k-1] = delta_k, gamma[k] = gamma_k, beta[k-1] = beta_k.
struct CFSpec {
    CFKind kind = CFKind::S;
    std::vector<Poly> alpha, delta, gamma, beta;

    static CFSpec S(std::vector<Poly> a);
    static CFSpec T(std::vector<Poly> a, std::vector<Poly> d);
    static CFSpec J(std::vector<Poly> g, std::vector<Poly> b);
    // Rank-indexed generators evaluated for k = 1..depth (gamma from k = 0).
    static CFSpec S(const std::function<Poly(int)>& a, int depth);
    static CFSpec T(const std::function<Poly(int)>& a, const std::function<Poly(int)>& d, int depth);
    static CFSpec J(const std::function<Poly(int)>& g, const std::function<Poly(int)>& b, int depth);

    int depth() const;
};

// Truncated at t^order; depth defaults to order.
Series expand(const CFSpec& spec, int order, int depth = -1);

struct JCoeffs {
    std::vector<Poly> gamma, beta;
};

JCoeffs contract_even(const std::vector<Poly>& alpha, const std::vector<Poly>& delta);

struct OddContraction {
    Poly lead;
    JCoeffs j;
};
OddContraction contract_odd(const std::vector<Poly>& alpha, const std::vector<Poly>& delta);

// Shifted T-fraction for the sequence a_{n+1}/a_1 built from a T-fraction with even delta only.
CFSpec shift_even_delta(const CFSpec& t);

enum class Direction { Augment, Restrict };
CFSpec augment_restrict(const CFSpec& t, Direction dir);

struct JRational {
    std::vector<mpq_class> gamma, beta;
};
// Throws std::domain_error when a pivot vanishes before the requested depth.
JRational jfraction_from_moments(const std::vector<mpq_class>& m, int depth);
std::vector<mpq_class> expand_j_rational(const JRational& j, int order);

std::vector<mpz_class> classical_sequence(const std::string& name, int N);
std::vector<mpz_class> genocchi(int N);
std::vector<mpz_class> median_genocchi(int N);
std::vector<mpz_class> hflat(int N);
std::vector<mpz_class> euler(int N);
std::vector<mpz_class> augmented_euler(int N);

using SeidelTriangle = std::vector<std::vector<mpz_class>>;
SeidelTriangle seidel(int rows);

// Coefficients of an integer-valued expansion.
std::vector<mpz_class> integer_coeffs(const Series& s);

}  // namespace dperm
