#ifndef QXSEP_PRIMESET_HPP
#define QXSEP_PRIMESET_HPP

#include <vector>

#include "qxsep/factor.hpp"

namespace qxsep {

// A set of monic primes, either the listed primes themselves or everything
// except them. The two modes are closed under complement, which is all the
// separability machinery ever needs.
class PrimeSet {
  public:
    enum class Mode { explicit_set, cofinite };

    static PrimeSet explicit_set(std::vector<MonicPrime> primes);
    static PrimeSet cofinite(std::vector<MonicPrime> excluded);

    Mode mode() const { return mode_; }
    const std::vector<MonicPrime>& primes() const { return primes_; }

    bool contains(const MonicPrime& p) const;

    // Swaps the mode and keeps the listed primes.
    PrimeSet complement() const;

    // Deterministic representative: the smallest listed prime in explicit
    // mode; in cofinite mode the first of x, x+1, x-1, x+2, x-2, ... that
    // is not excluded.
    MonicPrime first_prime() const;

    bool operator==(const PrimeSet& o) const { return mode_ == o.mode_ && primes_ == o.primes_; }

  private:
    PrimeSet(Mode mode, std::vector<MonicPrime> primes);
    Mode mode_;
    std::vector<MonicPrime> primes_;  // sorted, distinct
};

// Def-style membership: alpha is a non-unit and every monic prime factor of
// alpha lies in omega. Units are never members; zero is rejected.
bool is_omega_member(const Poly& alpha, const PrimeSet& omega);

}  // namespace qxsep

#endif
