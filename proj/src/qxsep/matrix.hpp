#ifndef QXSEP_MATRIX_HPP
#define QXSEP_MATRIX_HPP

#include <optional>
#include <vector>

#include "qxsep/poly.hpp"

namespace qxsep {

// Dense row-major matrix over Q[x].
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Poly& at(int i, int j) const { return e_[index(i, j)]; }
    Poly& at(int i, int j) { return e_[index(i, j)]; }

    std::vector<Poly> col(int j) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    std::vector<Poly> apply(const std::vector<Poly>& v) const;  // matrix * column vector
    bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Exact determinant via Bareiss elimination; square matrices only.
    Poly determinant() const;

    static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);

  private:
    size_t index(int i, int j) const;
    int rows_, cols_;
    std::vector<Poly> e_;
};

// Canonical column form of the lattice spanned by the columns of M:
// M * U = [H | 0] with U unimodular. H keeps one column per pivot, pivots
// are monic with strictly increasing pivot rows, entries of a pivot row in
// earlier columns are reduced modulo the pivot. H depends only on the
// column lattice.
struct HermiteForm {
    PolyMatrix h;
    PolyMatrix u;
    std::vector<int> pivot_rows;  // ascending; pivot_rows[j] is the pivot row of column j of h

    int rank() const { return h.cols(); }
};

HermiteForm hnf(const PolyMatrix& m);

// U * M * V = D with D diagonal, entries monic or zero, chained by
// divisibility. The transforms' inverses and determinants come along for
// free from the elimination and are cached here.
struct SmithForm {
    PolyMatrix u, d, v;
    PolyMatrix u_inv, v_inv;
    Rational det_u{1}, det_v{1};

    // Monic non-unit diagonal entries, in chain order d_1 | d_2 | ...
    std::vector<Poly> invariant_factors() const;
    int rank() const;  // number of nonzero diagonal entries
};

SmithForm snf(const PolyMatrix& m);

// Column-lattice membership: a coefficient vector c with M*c = v, when one
// exists over Q[x].
std::optional<std::vector<Poly>> member(const PolyMatrix& m, const std::vector<Poly>& v);
std::optional<std::vector<Poly>> member(const HermiteForm& hf, const std::vector<Poly>& v);

// Columns generate {c : M*c = 0} as a Q[x]-module.
PolyMatrix kernel(const PolyMatrix& m);

}  // namespace qxsep

#endif
