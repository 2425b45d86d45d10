#pragma once

// Shared helpers for the property-style tests: a tiny deterministic
// generator so every run sees the same cases.

#include <cstdint>
#include <numeric>
#include <vector>

#include "klr/permutation.hpp"
#include "klr/polynomial.hpp"

namespace klr_test {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // value in [0, bound)
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline klr::IntPolynomial random_poly(Rng& rng, int max_degree = 6, int coeff_span = 9) {
    const int terms = rng.int_in(0, max_degree + 1);
    std::vector<klr::IntPolynomial::Coeff> coeffs(static_cast<std::size_t>(terms));
    for (auto& c : coeffs) c = rng.int_in(-coeff_span, coeff_span);
    return klr::IntPolynomial(std::move(coeffs));
}

inline klr::Permutation random_perm(Rng& rng, int n) {
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    // Fisher-Yates with the deterministic stream
    for (int idx = n - 1; idx > 0; --idx) {
        const int swap_with = rng.int_in(0, idx);
        std::swap(line[static_cast<std::size_t>(idx)], line[static_cast<std::size_t>(swap_with)]);
    }
    return klr::Permutation::from_one_line(std::move(line));
}

}  // namespace klr_test
