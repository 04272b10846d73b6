#ifndef QXSEP_CLASS2_HPP
#define QXSEP_CLASS2_HPP

#include <vector>

#include "qxsep/poly.hpp"

namespace qxsep {

// Element of the free class-2 group on generators a_1..a_n with Q[x]
// exponents, in the normal form a_1^{u_1} ... a_n^{u_n} prod c_ij^{w_ij};
// c_ij = [a_j, a_i] for i < j is central and the collection rule is
// a_j a_i = a_i a_j c_ij.
class Class2Element {
  public:
    explicit Class2Element(int rank);  // identity
    Class2Element(std::vector<Poly> gen_exps, std::vector<Poly> comm_exps);

    int rank() const { return static_cast<int>(gen_.size()); }
    const std::vector<Poly>& gen_exps() const { return gen_; }
    // pair (i, j), i < j, stored at pair_index(i, j, rank())
    const std::vector<Poly>& comm_exps() const { return comm_; }

    static size_t pair_index(int i, int j, int n);
    static size_t pair_count(int n) { return static_cast<size_t>(n) * (n - 1) / 2; }

    bool is_identity() const;
    bool operator==(const Class2Element& o) const { return gen_ == o.gen_ && comm_ == o.comm_; }
    bool operator!=(const Class2Element& o) const { return !(*this == o); }

  private:
    std::vector<Poly> gen_;
    std::vector<Poly> comm_;
};

Class2Element c2_mul(const Class2Element& g, const Class2Element& h);
Class2Element c2_inverse(const Class2Element& g);
Class2Element c2_pow(const Class2Element& g, const Poly& alpha);
Class2Element c2_commutator(const Class2Element& g, const Class2Element& h);

// The h with c2_pow(h, beta) = gs[0]^beta * ... * gs[m-1]^beta; exists and
// is unique because the exponent ring contains the rationals.
Class2Element c2_product_root(const std::vector<Class2Element>& gs, const Poly& beta);

}  // namespace qxsep

#endif
