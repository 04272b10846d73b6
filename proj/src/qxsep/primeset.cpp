#include "qxsep/primeset.hpp"

#include <algorithm>

#include "qxsep/error.hpp"

namespace qxsep {

PrimeSet::PrimeSet(Mode mode, std::vector<MonicPrime> primes) : mode_(mode), primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    if (mode_ == Mode::explicit_set && primes_.empty())
        throw Error(Errc::parse_error, "an explicit prime set must be non-empty");
}

PrimeSet PrimeSet::explicit_set(std::vector<MonicPrime> primes) {
    return PrimeSet(Mode::explicit_set, std::move(primes));
}

PrimeSet PrimeSet::cofinite(std::vector<MonicPrime> excluded) {
    return PrimeSet(Mode::cofinite, std::move(excluded));
}

bool PrimeSet::contains(const MonicPrime& p) const {
    bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
    return mode_ == Mode::explicit_set ? listed : !listed;
}

PrimeSet PrimeSet::complement() const {
    Mode m = mode_ == Mode::explicit_set ? Mode::cofinite : Mode::explicit_set;
    return PrimeSet(m, primes_);
}

MonicPrime PrimeSet::first_prime() const {
    if (mode_ == Mode::explicit_set) return primes_.front();
    // Every x + c is prime; walk c = 0, 1, -1, 2, -2, ... past the exclusions.
    for (long step = 0;; ++step) {
        long k = (step + 1) / 2;
        if (step % 2 == 0) k = -k;  // 0, 1, -1, 2, -2, ...
        MonicPrime cand = MonicPrime::unchecked(Poly::x() + Poly(k));
        if (contains(cand)) return cand;
    }
}

bool is_omega_member(const Poly& alpha, const PrimeSet& omega) {
    if (alpha.is_zero()) throw Error(Errc::zero_polynomial, "zero is not an omega-member candidate");
    if (alpha.is_unit()) return false;
    for (const auto& [p, e] : factor(alpha).factors)
        if (!omega.contains(p)) return false;
    return true;
}

}  // namespace qxsep
