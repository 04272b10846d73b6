#include "qxsep/quasicyclic.hpp"

#include <algorithm>

#include "qxsep/error.hpp"

namespace qxsep {

QuasiElement::QuasiElement(MonicPrime pi, int level, Poly num) : pi_(std::move(pi)), level_(level), num_(std::move(num)) {
    if (level_ < 0) throw Error(Errc::dimension_mismatch, "negative quasicyclic level");
    num_ = divmod(num_, pi_.poly().pow(static_cast<unsigned>(level_))).remainder;
    while (!num_.is_zero() && level_ > 0) {
        auto [q, r] = divmod(num_, pi_.poly());
        if (!r.is_zero()) break;
        num_ = q;
        --level_;
    }
    if (num_.is_zero()) level_ = 0;
}

QuasiElement qc_add(const QuasiElement& a, const QuasiElement& b) {
    if (a.pi() != b.pi()) throw Error(Errc::prime_mismatch, "quasicyclic elements over different primes");
    int level = std::max(a.level(), b.level());
    Poly num = a.num() * a.pi().poly().pow(static_cast<unsigned>(level - a.level())) +
               b.num() * b.pi().poly().pow(static_cast<unsigned>(level - b.level()));
    return QuasiElement(a.pi(), level, std::move(num));
}

QuasiElement qc_neg(const QuasiElement& a) { return QuasiElement(a.pi(), a.level(), -a.num()); }

QuasiElement qc_scale(const QuasiElement& a, const Poly& alpha) {
    return QuasiElement(a.pi(), a.level(), alpha * a.num());
}

Poly qc_order(const QuasiElement& a) { return a.pi().poly().pow(static_cast<unsigned>(a.level())); }

QuasiElement qc_root(const QuasiElement& a, const Poly& alpha) {
    if (alpha.is_zero()) throw Error(Errc::zero_polynomial, "root exponent must be nonzero");
    // alpha = pi^e * beta with pi not dividing beta; raise the level by e and
    // undo beta by inverting it modulo pi^(level + e)
    Poly beta = alpha;
    int e = 0;
    while (true) {
        auto [q, r] = divmod(beta, a.pi().poly());
        if (!r.is_zero()) break;
        beta = q;
        ++e;
    }
    int level = a.level() + e;
    Poly modulus = a.pi().poly().pow(static_cast<unsigned>(level));
    Poly s = gcd_ext(beta, modulus).s;  // s * beta = 1 mod pi^level
    return QuasiElement(a.pi(), level, s * a.num());
}

}  // namespace qxsep
