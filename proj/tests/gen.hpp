#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dperm/perm.hpp"
#include "dperm/poly.hpp"

// Hand-rolled generators for the property tests.
namespace gen {

inline std::vector<int> brute_d_word(std::mt19937_64& rng, int n) {
    const int N = 2 * n;
    for (;;) {
        std::vector<int> w(N + 1, 0);
        std::vector<char> used(N + 1, 0);
        bool stuck = false;
        for (int i = 1; i <= N && !stuck; ++i) {
            std::vector<int> ok;
            for (int v = 1; v <= N; ++v)
                if (!used[v] && (i % 2 ? v >= i : v <= i)) ok.push_back(v);
            if (ok.empty()) {
                stuck = true;
                break;
            }
            w[i] = ok[rng() % ok.size()];
            used[w[i]] = 1;
        }
        if (!stuck) return {w.begin() + 1, w.end()};
    }
}

inline dperm::Permutation d_perm(std::mt19937_64& rng, int n) { return dperm::Permutation(brute_d_word(rng, n)); }

// sparse polynomial in the given variables, small coefficients and degrees
inline dperm::Poly poly(std::mt19937_64& rng, const dperm::VarTablePtr& t, const std::vector<std::string>& names,
                        int terms = 4, int max_deg = 3) {
    dperm::Poly p;
    for (int k = 0; k < terms; ++k) {
        dperm::Poly m(static_cast<long>(rng() % 11) - 5);
        for (const auto& nm : names) m *= dperm::Poly::var(t, nm).pow(static_cast<unsigned>(rng() % (max_deg + 1)));
        p += m;
    }
    return p;
}

}  // namespace gen
