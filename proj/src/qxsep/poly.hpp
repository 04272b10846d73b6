#ifndef QXSEP_POLY_HPP
#define QXSEP_POLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qxsep/rational.hpp"

namespace qxsep {

// Dense univariate polynomial over the rationals. Immutable value type;
// coefficient i belongs to x^i and the top coefficient is never zero.
class Poly {
  public:
    // degree() of the zero polynomial; stands in for "minus infinity".
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(long constant);  // NOLINT(google-explicit-constructor) constants convert freely
    explicit Poly(const Rational& constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();
    static Poly monomial(const Rational& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_one() const;
    bool is_unit() const { return c_.size() == 1; }  // nonzero constant
    bool is_monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly pow(unsigned k) const;
    Poly derivative() const;
    Rational eval(const Rational& at) const;
    Poly monic() const;  // pre: nonzero

    std::string str() const;
    static Poly parse(std::string_view text);

  private:
    void strip();
    std::vector<Rational> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
DivMod divmod(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);
Poly exact_div(const Poly& a, const Poly& d);

struct Xgcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // g = s*a + t*b
};

// Extended gcd with canonical output: g monic and, when both inputs are
// nonzero, deg s < deg(b/g). Throws when a = b = 0.
Xgcd gcd_ext(const Poly& a, const Poly& b);

Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);  // monic (or zero)

// alpha*(alpha-1)*...*(alpha-k+1) / k!
Poly binom_poly(const Poly& alpha, unsigned k);

// Total order: by degree, then coefficients compared from the top down.
int poly_cmp(const Poly& a, const Poly& b);

}  // namespace qxsep

#endif
