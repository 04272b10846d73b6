#ifndef QXSEP_FACTOR_HPP
#define QXSEP_FACTOR_HPP

#include <utility>
#include <vector>

#include "qxsep/poly.hpp"

namespace qxsep {

// A monic irreducible polynomial of degree >= 1. The public constructor
// normalizes non-monic input and certifies irreducibility with factor().
class MonicPrime {
  public:
    explicit MonicPrime(const Poly& p);

    const Poly& poly() const { return p_; }
    int degree() const { return p_.degree(); }

    bool operator==(const MonicPrime& o) const { return p_ == o.p_; }
    bool operator!=(const MonicPrime& o) const { return p_ != o.p_; }
    bool operator<(const MonicPrime& o) const { return poly_cmp(p_, o.p_) < 0; }

    // Trusted path for polynomials already known monic irreducible
    // (outputs of factor(), fixed internal prime tables).
    static MonicPrime unchecked(Poly monic_irreducible);

  private:
    struct Trusted {};
    MonicPrime(Poly p, Trusted) : p_(std::move(p)) {}
    Poly p_;
};

struct Factorization {
    Rational unit;  // unit * prod(p_i^e_i) reproduces the input exactly
    std::vector<std::pair<MonicPrime, int>> factors;  // distinct, sorted by (degree, lex)
};

// Complete factorization over Q into monic irreducibles. Throws on zero.
Factorization factor(const Poly& a);

bool is_irreducible(const Poly& a);

// Yun decomposition of a nonzero polynomial: pairwise-coprime monic
// squarefree parts tagged with their multiplicity.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

}  // namespace qxsep

#endif
