#ifndef QXSEP_QUASICYCLIC_HPP
#define QXSEP_QUASICYCLIC_HPP

#include "qxsep/factor.hpp"

namespace qxsep {

// Element of the pi-quasicyclic group: the class of num / pi^level modulo
// Q[x]. Reduced form: deg num < level * deg pi and pi does not divide num;
// zero is level 0, num 0.
class QuasiElement {
  public:
    QuasiElement(MonicPrime pi, int level, Poly num);

    static QuasiElement zero(const MonicPrime& pi) { return QuasiElement(pi, 0, Poly()); }

    const MonicPrime& pi() const { return pi_; }
    int level() const { return level_; }
    const Poly& num() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const QuasiElement& o) const {
        return pi_ == o.pi_ && level_ == o.level_ && num_ == o.num_;
    }
    bool operator!=(const QuasiElement& o) const { return !(*this == o); }

  private:
    MonicPrime pi_;
    int level_;
    Poly num_;
};

QuasiElement qc_add(const QuasiElement& a, const QuasiElement& b);
QuasiElement qc_neg(const QuasiElement& a);
QuasiElement qc_scale(const QuasiElement& a, const Poly& alpha);
Poly qc_order(const QuasiElement& a);  // pi^level; order of zero is 1

// Divisibility made constructive: an h with qc_scale(h, alpha) = a.
QuasiElement qc_root(const QuasiElement& a, const Poly& alpha);

}  // namespace qxsep

#endif
