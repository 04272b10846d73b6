#include "qxsep/class2.hpp"

#include "qxsep/error.hpp"

namespace qxsep {

Class2Element::Class2Element(int rank) {
    if (rank < 1) throw Error(Errc::rank_mismatch, "rank must be positive");
    gen_.resize(static_cast<size_t>(rank));
    comm_.resize(pair_count(rank));
}

Class2Element::Class2Element(std::vector<Poly> gen_exps, std::vector<Poly> comm_exps)
    : gen_(std::move(gen_exps)), comm_(std::move(comm_exps)) {
    if (gen_.empty()) throw Error(Errc::rank_mismatch, "rank must be positive");
    if (comm_.size() != pair_count(rank()))
        throw Error(Errc::rank_mismatch, "commutator exponent count does not match the rank");
}

size_t Class2Element::pair_index(int i, int j, int n) {
    if (i < 0 || j <= i || j >= n) throw Error(Errc::dimension_mismatch, "bad commutator pair");
    // pairs listed (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return static_cast<size_t>(i) * static_cast<size_t>(n) - static_cast<size_t>(i) * (i + 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

bool Class2Element::is_identity() const {
    for (const Poly& p : gen_)
        if (!p.is_zero()) return false;
    for (const Poly& p : comm_)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

void check_rank(const Class2Element& g, const Class2Element& h) {
    if (g.rank() != h.rank()) throw Error(Errc::rank_mismatch, "elements of different rank");
}

// cross(u, v)[i<j] = u_j * v_i: the commutator exponents collected when a
// word with generator exponents v moves left past one with exponents u.
std::vector<Poly> cross(const std::vector<Poly>& u, const std::vector<Poly>& v) {
    int n = static_cast<int>(u.size());
    std::vector<Poly> w(Class2Element::pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            w[Class2Element::pair_index(i, j, n)] =
                u[static_cast<size_t>(j)] * v[static_cast<size_t>(i)];
    return w;
}

}  // namespace

Class2Element c2_mul(const Class2Element& g, const Class2Element& h) {
    check_rank(g, h);
    int n = g.rank();
    std::vector<Poly> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<size_t>(i)] = g.gen_exps()[static_cast<size_t>(i)] + h.gen_exps()[static_cast<size_t>(i)];
    std::vector<Poly> w = cross(g.gen_exps(), h.gen_exps());
    for (size_t k = 0; k < w.size(); ++k) w[k] = g.comm_exps()[k] + h.comm_exps()[k] + w[k];
    return Class2Element(std::move(u), std::move(w));
}

Class2Element c2_inverse(const Class2Element& g) {
    int n = g.rank();
    std::vector<Poly> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] = -g.gen_exps()[static_cast<size_t>(i)];
    std::vector<Poly> w = cross(g.gen_exps(), g.gen_exps());
    for (size_t k = 0; k < w.size(); ++k) w[k] = w[k] - g.comm_exps()[k];
    return Class2Element(std::move(u), std::move(w));
}

Class2Element c2_pow(const Class2Element& g, const Poly& alpha) {
    int n = g.rank();
    Poly correction = binom_poly(alpha, 2);
    std::vector<Poly> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] = alpha * g.gen_exps()[static_cast<size_t>(i)];
    std::vector<Poly> w = cross(g.gen_exps(), g.gen_exps());
    for (size_t k = 0; k < w.size(); ++k) w[k] = alpha * g.comm_exps()[k] + correction * w[k];
    return Class2Element(std::move(u), std::move(w));
}

Class2Element c2_commutator(const Class2Element& g, const Class2Element& h) {
    check_rank(g, h);
    return c2_mul(c2_mul(c2_inverse(g), c2_inverse(h)), c2_mul(g, h));
}

Class2Element c2_product_root(const std::vector<Class2Element>& gs, const Poly& beta) {
    if (gs.empty()) throw Error(Errc::dimension_mismatch, "product root of an empty list");
    if (beta.is_zero()) throw Error(Errc::zero_polynomial, "root exponent must be nonzero");
    Class2Element product = c2_pow(gs.front(), beta);
    for (size_t i = 1; i < gs.size(); ++i) product = c2_mul(product, c2_pow(gs[i], beta));
    // solve c2_pow(h, beta) = product: the generator exponents divide by
    // beta, the commutator exponents after removing the binom(beta, 2)
    // correction (exact because Q[x] contains the rationals)
    int n = product.rank();
    std::vector<Poly> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] = exact_div(product.gen_exps()[static_cast<size_t>(i)], beta);
    Poly correction = binom_poly(beta, 2);
    std::vector<Poly> self = cross(u, u);
    std::vector<Poly> w(Class2Element::pair_count(n));
    for (size_t k = 0; k < w.size(); ++k)
        w[k] = exact_div(product.comm_exps()[k] - correction * self[k], beta);
    return Class2Element(std::move(u), std::move(w));
}

}  // namespace qxsep
