#ifndef QXSEP_RNG_HPP
#define QXSEP_RNG_HPP

#include <cstdint>

#include "qxsep/poly.hpp"

namespace qxsep {

// Small deterministic generator (splitmix64). Standard-library distributions
// vary between implementations; this one keeps seeded output byte-identical
// everywhere, which the golden-file tests rely on.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30u)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27u)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31u);
    }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    // integer in [lo, hi]
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

    // polynomial of degree <= max_degree with integer coefficients in
    // [-coeff_bound, coeff_bound]
    Poly poly(int max_degree, long coeff_bound) {
        std::vector<Rational> c(static_cast<size_t>(range(0, max_degree)) + 1);
        for (auto& q : c) q = Rational(range(-coeff_bound, coeff_bound));
        return Poly(std::move(c));
    }

    // as poly(), but never the zero polynomial
    Poly nonzero_poly(int max_degree, long coeff_bound) {
        while (true) {
            Poly p = poly(max_degree, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }
};

}  // namespace qxsep

#endif
