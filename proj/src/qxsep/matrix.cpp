#include "qxsep/matrix.hpp"

#include <algorithm>

#include "qxsep/error.hpp"

namespace qxsep {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error(Errc::dimension_mismatch, "negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly());
}

size_t PolyMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw Error(Errc::dimension_mismatch, "matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
}

std::vector<Poly> PolyMatrix::col(int j) const {
    std::vector<Poly> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Poly& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
    std::vector<Poly> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows()) throw Error(Errc::dimension_mismatch, "hstack row mismatch");
    PolyMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Poly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw Error(Errc::dimension_mismatch, "determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return Poly(1);
    PolyMatrix a(*this);
    int sign = 1;
    Poly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Poly();
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = Poly();
        }
        prev = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Hermite form (column operations)

namespace {

// Column operations applied in lockstep to the working matrix and the
// accumulated transform.
struct ColOps {
    PolyMatrix& a;
    PolyMatrix& u;

    void swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < u.rows(); ++r) std::swap(u.at(r, i), u.at(r, j));
    }
    // col_j -= q * col_i
    void axpy(const Poly& q, int i, int j) {
        if (q.is_zero()) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j) - q * a.at(r, i);
        for (int r = 0; r < u.rows(); ++r) u.at(r, j) = u.at(r, j) - q * u.at(r, i);
    }
    void scale(int j, const Rational& s) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j).scaled(s);
        for (int r = 0; r < u.rows(); ++r) u.at(r, j) = u.at(r, j).scaled(s);
    }
};

}  // namespace

HermiteForm hnf(const PolyMatrix& m) {
    PolyMatrix a(m);
    PolyMatrix u = PolyMatrix::identity(m.cols());
    ColOps ops{a, u};
    std::vector<int> pivot_rows;
    int next = 0;
    for (int r = 0; r < m.rows() && next < m.cols(); ++r) {
        // Euclid across the entries of row r in columns >= next.
        while (true) {
            int best = -1;
            for (int j = next; j < m.cols(); ++j)
                if (!a.at(r, j).is_zero() && (best < 0 || a.at(r, j).degree() < a.at(r, best).degree()))
                    best = j;
            if (best < 0) break;
            ops.swap(next, best);
            bool reduced_all = true;
            for (int j = next + 1; j < m.cols(); ++j) {
                if (a.at(r, j).is_zero()) continue;
                ops.axpy(divmod(a.at(r, j), a.at(r, next)).quotient, next, j);
                if (!a.at(r, j).is_zero()) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (a.at(r, next).is_zero()) continue;
        ops.scale(next, Rational(1) / a.at(r, next).leading());
        for (int j = 0; j < next; ++j)
            ops.axpy(divmod(a.at(r, j), a.at(r, next)).quotient, next, j);
        pivot_rows.push_back(r);
        ++next;
    }
    PolyMatrix h(m.rows(), next);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < next; ++j) h.at(i, j) = a.at(i, j);
    return {std::move(h), std::move(u), std::move(pivot_rows)};
}

std::optional<std::vector<Poly>> member(const HermiteForm& hf, const std::vector<Poly>& v) {
    if (static_cast<int>(v.size()) != hf.h.rows())
        throw Error(Errc::dimension_mismatch, "membership vector has wrong length");
    std::vector<Poly> w = v;
    std::vector<Poly> y(static_cast<size_t>(hf.rank()));
    int idx = 0;
    for (int r = 0; r < hf.h.rows(); ++r) {
        if (idx < hf.rank() && hf.pivot_rows[static_cast<size_t>(idx)] == r) {
            auto [q, rem] = divmod(w[static_cast<size_t>(r)], hf.h.at(r, idx));
            if (!rem.is_zero()) return std::nullopt;
            if (!q.is_zero())
                for (int i = r; i < hf.h.rows(); ++i)
                    w[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] - q * hf.h.at(i, idx);
            y[static_cast<size_t>(idx)] = std::move(q);
            ++idx;
        } else if (!w[static_cast<size_t>(r)].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Poly> padded(static_cast<size_t>(hf.u.cols()));
    for (int i = 0; i < hf.rank(); ++i) padded[static_cast<size_t>(i)] = y[static_cast<size_t>(i)];
    return hf.u.apply(padded);
}

std::optional<std::vector<Poly>> member(const PolyMatrix& m, const std::vector<Poly>& v) {
    return member(hnf(m), v);
}

PolyMatrix kernel(const PolyMatrix& m) {
    HermiteForm hf = hnf(m);
    int k = m.cols() - hf.rank();
    PolyMatrix out(m.cols(), k);
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = hf.u.at(i, hf.rank() + j);
    return out;
}

// ---------------------------------------------------------------------------
// Smith form

namespace {

// Row and column operations with transform/inverse/determinant tracking.
struct SnfState {
    PolyMatrix a, u, u_inv, v, v_inv;
    Rational det_u{1}, det_v{1};

    explicit SnfState(const PolyMatrix& m)
        : a(m),
          u(PolyMatrix::identity(m.rows())),
          u_inv(PolyMatrix::identity(m.rows())),
          v(PolyMatrix::identity(m.cols())),
          v_inv(PolyMatrix::identity(m.cols())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
        det_u = -det_u;
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
        det_v = -det_v;
    }
    // row_i -= q * row_j
    void row_axpy(const Poly& q, int j, int i) {
        if (q.is_zero()) return;
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = a.at(i, c) - q * a.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = u.at(i, c) - q * u.at(j, c);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, j) = u_inv.at(r, j) + q * u_inv.at(r, i);
    }
    // col_j -= q * col_i
    void col_axpy(const Poly& q, int i, int j) {
        if (q.is_zero()) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j) - q * a.at(r, i);
        for (int r = 0; r < v.rows(); ++r) v.at(r, j) = v.at(r, j) - q * v.at(r, i);
        for (int c = 0; c < v_inv.cols(); ++c) v_inv.at(i, c) = v_inv.at(i, c) + q * v_inv.at(j, c);
    }
    void scale_row(int i, const Rational& s) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = a.at(i, c).scaled(s);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = u.at(i, c).scaled(s);
        Rational inv = Rational(1) / s;
        for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = u_inv.at(r, i).scaled(inv);
        det_u *= s;
    }
};

}  // namespace

SmithForm snf(const PolyMatrix& m) {
    SnfState st(m);
    int limit = std::min(m.rows(), m.cols());
    for (int t = 0; t < limit; ++t) {
        // minimal-degree pivot in the trailing submatrix, ties row-major
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j)
                if (!st.a.at(i, j).is_zero() &&
                    (pi < 0 || st.a.at(i, j).degree() < st.a.at(pi, pj).degree())) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        for (bool settled = false; !settled;) {
            // clear column t; a nonzero remainder becomes the smaller pivot
            bool restart = false;
            for (int i = t + 1; i < m.rows() && !restart; ++i) {
                if (st.a.at(i, t).is_zero()) continue;
                st.row_axpy(divmod(st.a.at(i, t), st.a.at(t, t)).quotient, t, i);
                if (!st.a.at(i, t).is_zero()) {
                    st.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (int j = t + 1; j < m.cols() && !restart; ++j) {
                if (st.a.at(t, j).is_zero()) continue;
                st.col_axpy(divmod(st.a.at(t, j), st.a.at(t, t)).quotient, t, j);
                if (!st.a.at(t, j).is_zero()) {
                    st.swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;
            // pivot must divide the whole trailing submatrix before moving on
            settled = true;
            for (int i = t + 1; i < m.rows() && settled; ++i)
                for (int j = t + 1; j < m.cols() && settled; ++j)
                    if (!divides(st.a.at(t, t), st.a.at(i, j))) {
                        st.row_axpy(Poly(-1), i, t);  // row_t += row_i
                        settled = false;
                    }
        }
    }
    for (int t = 0; t < limit; ++t)
        if (!st.a.at(t, t).is_zero() && !st.a.at(t, t).is_monic())
            st.scale_row(t, Rational(1) / st.a.at(t, t).leading());

    SmithForm out;
    out.u = std::move(st.u);
    out.d = std::move(st.a);
    out.v = std::move(st.v);
    out.u_inv = std::move(st.u_inv);
    out.v_inv = std::move(st.v_inv);
    out.det_u = std::move(st.det_u);
    out.det_v = std::move(st.det_v);
    return out;
}

std::vector<Poly> SmithForm::invariant_factors() const {
    std::vector<Poly> out;
    int limit = std::min(d.rows(), d.cols());
    for (int i = 0; i < limit; ++i) {
        const Poly& p = d.at(i, i);
        if (!p.is_zero() && !p.is_unit()) out.push_back(p);
    }
    return out;
}

int SmithForm::rank() const {
    int r = 0;
    int limit = std::min(d.rows(), d.cols());
    for (int i = 0; i < limit; ++i)
        if (!d.at(i, i).is_zero()) ++r;
    return r;
}

}  // namespace qxsep
