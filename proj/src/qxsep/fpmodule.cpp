#include "qxsep/fpmodule.hpp"

#include <algorithm>

#include "qxsep/error.hpp"

namespace qxsep {

struct FPModule::Impl {
    int ngens;
    PolyMatrix relations;
    SmithForm smith;
    HermiteForm rel_hnf;
    std::vector<Poly> factors;    // monic non-unit invariant factors, chain order
    std::vector<int> torsion_rows;  // row of the Smith transform per factor
    std::vector<int> free_rows;
};

FPModule::FPModule(int ngens, PolyMatrix relations) {
    if (ngens < 1) throw Error(Errc::dimension_mismatch, "a module needs at least one generator");
    if (relations.rows() != ngens)
        throw Error(Errc::dimension_mismatch, "relation matrix must have one row per generator");
    auto impl = std::make_shared<Impl>();
    impl->ngens = ngens;
    impl->relations = std::move(relations);
    impl->smith = snf(impl->relations);
    impl->rel_hnf = hnf(impl->relations);
    int limit = std::min(impl->relations.rows(), impl->relations.cols());
    for (int i = 0; i < ngens; ++i) {
        const Poly* d = i < limit ? &impl->smith.d.at(i, i) : nullptr;
        if (d == nullptr || d->is_zero()) {
            impl->free_rows.push_back(i);
        } else if (!d->is_unit()) {
            impl->factors.push_back(*d);
            impl->torsion_rows.push_back(i);
        }
        // unit diagonal entries present trivial summands and disappear
    }
    impl_ = std::move(impl);
}

int FPModule::ngens() const { return impl_->ngens; }
const PolyMatrix& FPModule::relations() const { return impl_->relations; }
const std::vector<Poly>& FPModule::factors() const { return impl_->factors; }
int FPModule::rank() const { return static_cast<int>(impl_->free_rows.size()); }

bool FPModule::operator==(const FPModule& o) const {
    return impl_ == o.impl_ || (impl_->ngens == o.impl_->ngens && impl_->relations == o.impl_->relations);
}

ModElement FPModule::element(std::vector<Poly> coords) const {
    if (static_cast<int>(coords.size()) != impl_->ngens)
        throw Error(Errc::dimension_mismatch, "element coordinate count mismatch");
    // reduce modulo the relation lattice, column by column of its HNF
    const HermiteForm& hf = impl_->rel_hnf;
    for (int j = 0; j < hf.rank(); ++j) {
        int r = hf.pivot_rows[static_cast<size_t>(j)];
        Poly q = divmod(coords[static_cast<size_t>(r)], hf.h.at(r, j)).quotient;
        if (q.is_zero()) continue;
        for (int i = r; i < impl_->ngens; ++i)
            coords[static_cast<size_t>(i)] = coords[static_cast<size_t>(i)] - q * hf.h.at(i, j);
    }
    return ModElement{std::move(coords)};
}

ModElement FPModule::zero() const { return ModElement{std::vector<Poly>(static_cast<size_t>(impl_->ngens))}; }

bool FPModule::is_zero(const ModElement& e) const {
    for (const Poly& p : e.coords)
        if (!p.is_zero()) return false;
    return true;
}

ModElement FPModule::add(const ModElement& a, const ModElement& b) const {
    if (a.coords.size() != b.coords.size())
        throw Error(Errc::dimension_mismatch, "element coordinate count mismatch");
    std::vector<Poly> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return element(std::move(c));
}

ModElement FPModule::neg(const ModElement& a) const {
    std::vector<Poly> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
    return element(std::move(c));
}

ModElement FPModule::scale(const ModElement& a, const Poly& alpha) const {
    std::vector<Poly> c(a.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = alpha * a.coords[i];
    return element(std::move(c));
}

std::vector<Poly> FPModule::to_decomposed(const ModElement& e) const {
    if (static_cast<int>(e.coords.size()) != impl_->ngens)
        throw Error(Errc::dimension_mismatch, "element coordinate count mismatch");
    std::vector<Poly> w = impl_->smith.u.apply(e.coords);
    std::vector<Poly> out;
    out.reserve(impl_->factors.size() + impl_->free_rows.size());
    for (size_t i = 0; i < impl_->factors.size(); ++i)
        out.push_back(divmod(w[static_cast<size_t>(impl_->torsion_rows[i])], impl_->factors[i]).remainder);
    for (int r : impl_->free_rows) out.push_back(w[static_cast<size_t>(r)]);
    return out;
}

ModElement FPModule::from_decomposed(const std::vector<Poly>& w) const {
    size_t expected = impl_->factors.size() + impl_->free_rows.size();
    if (w.size() != expected)
        throw Error(Errc::dimension_mismatch, "decomposed coordinate count mismatch");
    std::vector<Poly> full(static_cast<size_t>(impl_->ngens));
    for (size_t i = 0; i < impl_->factors.size(); ++i)
        full[static_cast<size_t>(impl_->torsion_rows[i])] = w[i];
    for (size_t j = 0; j < impl_->free_rows.size(); ++j)
        full[static_cast<size_t>(impl_->free_rows[j])] = w[impl_->factors.size() + j];
    return element(impl_->smith.u_inv.apply(full));
}

ModElement FPModule::cyclic_generator(int i) const {
    if (i < 0 || i >= static_cast<int>(impl_->factors.size()))
        throw Error(Errc::dimension_mismatch, "cyclic summand index out of range");
    std::vector<Poly> w(impl_->factors.size() + impl_->free_rows.size());
    w[static_cast<size_t>(i)] = Poly(1);
    return from_decomposed(w);
}

ModElement FPModule::free_generator(int j) const {
    if (j < 0 || j >= rank()) throw Error(Errc::dimension_mismatch, "free summand index out of range");
    std::vector<Poly> w(impl_->factors.size() + impl_->free_rows.size());
    w[impl_->factors.size() + static_cast<size_t>(j)] = Poly(1);
    return from_decomposed(w);
}

Submodule FPModule::submodule(PolyMatrix gens) const {
    if (gens.rows() != impl_->ngens)
        throw Error(Errc::dimension_mismatch, "submodule generators must have one row per ambient generator");
    HermiteForm canon = hnf(PolyMatrix::hstack(gens, impl_->relations));
    return Submodule(*this, std::move(gens), std::move(canon));
}

Submodule FPModule::trivial_submodule() const { return submodule(PolyMatrix(impl_->ngens, 0)); }

Submodule FPModule::full_submodule() const { return submodule(PolyMatrix::identity(impl_->ngens)); }

bool Submodule::contains(const ModElement& e) const {
    return member(canon_, e.coords).has_value();
}

bool Submodule::operator==(const Submodule& o) const {
    return ambient_ == o.ambient_ && canon_.h == o.canon_.h;
}

// ---------------------------------------------------------------------------

std::pair<std::vector<Poly>, int> canonical_decomposition(const FPModule& g) {
    return {g.factors(), g.rank()};
}

Ideal order_ideal(const FPModule& g, const ModElement& e) {
    std::vector<Poly> w = g.to_decomposed(e);
    size_t nfac = g.factors().size();
    Poly acc(1);
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        if (i >= nfac) return {Poly()};  // nonzero free coordinate: unbounded order
        const Poly& d = g.factors()[i];
        acc = poly_lcm(acc, exact_div(d, poly_gcd(d, w[i])));
    }
    return {acc};
}

Ideal exponent_ideal(const FPModule& g) {
    if (g.rank() > 0) return {Poly()};
    if (g.factors().empty()) return {Poly(1)};
    return {g.factors().back()};
}

namespace {

PolyMatrix columns_matrix(const FPModule& g, const std::vector<ModElement>& elems) {
    PolyMatrix m(g.ngens(), static_cast<int>(elems.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = elems[static_cast<size_t>(j)].coords[static_cast<size_t>(i)];
    return m;
}

}  // namespace

Submodule torsion(const FPModule& g) {
    std::vector<ModElement> gens;
    for (int i = 0; i < static_cast<int>(g.factors().size()); ++i) gens.push_back(g.cyclic_generator(i));
    return g.submodule(columns_matrix(g, gens));
}

Submodule omega_torsion(const FPModule& g, const PrimeSet& omega) {
    std::vector<ModElement> gens;
    for (int i = 0; i < static_cast<int>(g.factors().size()); ++i) {
        const Poly& d = g.factors()[static_cast<size_t>(i)];
        Poly cofactor(1);  // the part of d outside omega
        bool has_omega_part = false;
        for (const auto& [p, e] : factor(d).factors) {
            if (omega.contains(p))
                has_omega_part = true;
            else
                cofactor = cofactor * p.poly().pow(static_cast<unsigned>(e));
        }
        if (has_omega_part) gens.push_back(g.scale(g.cyclic_generator(i), cofactor));
    }
    return g.submodule(columns_matrix(g, gens));
}

Submodule primary_component(const FPModule& g, const MonicPrime& pi) {
    return omega_torsion(g, PrimeSet::explicit_set({pi}));
}

Quotient quotient(const FPModule& g, const Submodule& n) {
    if (n.ambient() != g) throw Error(Errc::ambient_mismatch, "submodule lives in a different module");
    return {FPModule(g.ngens(), PolyMatrix::hstack(g.relations(), n.gens()))};
}

Submodule power_subgroup(const FPModule& g, const Poly& alpha) {
    if (alpha.is_zero()) throw Error(Errc::zero_polynomial, "power subgroup needs a nonzero exponent");
    PolyMatrix gens(g.ngens(), g.ngens());
    for (int i = 0; i < g.ngens(); ++i) gens.at(i, i) = alpha;
    return g.submodule(std::move(gens));
}

std::optional<ModElement> root(const FPModule& g, const ModElement& e, const Poly& alpha) {
    if (alpha.is_zero()) throw Error(Errc::zero_polynomial, "root exponent must be nonzero");
    if (static_cast<int>(e.coords.size()) != g.ngens())
        throw Error(Errc::dimension_mismatch, "element coordinate count mismatch");
    PolyMatrix scaled(g.ngens(), g.ngens());
    for (int i = 0; i < g.ngens(); ++i) scaled.at(i, i) = alpha;
    auto c = member(PolyMatrix::hstack(scaled, g.relations()), e.coords);
    if (!c) return std::nullopt;
    std::vector<Poly> h(c->begin(), c->begin() + g.ngens());
    return g.element(std::move(h));
}

int height(const FPModule& g, const ModElement& e, const MonicPrime& pi) {
    if (g.is_zero(e)) throw Error(Errc::zero_element, "height of the identity is undefined");
    Poly exp = exponent_ideal(g).generator;
    if (exp.is_zero()) throw Error(Errc::not_primary, "module is unbounded");
    Poly rest = exp;
    int bound = 0;
    while (!rest.is_unit()) {
        auto [q, r] = divmod(rest, pi.poly());
        if (!r.is_zero()) throw Error(Errc::not_primary, "module exponent is not a power of the given prime");
        rest = q;
        ++bound;
    }
    int n = 0;
    while (n < bound && root(g, e, pi.poly().pow(static_cast<unsigned>(n + 1)))) ++n;
    return n;
}

bool is_finite_omega_type(const FPModule& g, const PrimeSet& omega) {
    if (g.rank() > 0) return false;
    for (const Poly& d : g.factors())
        for (const auto& [p, e] : factor(d).factors)
            if (!omega.contains(p)) return false;
    return true;
}

Submodule sum(const Submodule& a, const Submodule& b) {
    if (a.ambient() != b.ambient()) throw Error(Errc::ambient_mismatch, "sum of submodules of different modules");
    return a.ambient().submodule(PolyMatrix::hstack(a.gens(), b.gens()));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
    if (a.ambient() != b.ambient())
        throw Error(Errc::ambient_mismatch, "intersection of submodules of different modules");
    const FPModule& g = a.ambient();
    const PolyMatrix& rel = g.relations();
    // solutions of A s + R w = B t + R u; the intersection is spanned by the
    // left-hand sides over the kernel of [A | R | -B | -R]
    PolyMatrix neg_b(g.ngens(), b.gens().cols());
    for (int i = 0; i < neg_b.rows(); ++i)
        for (int j = 0; j < neg_b.cols(); ++j) neg_b.at(i, j) = -b.gens().at(i, j);
    PolyMatrix neg_r(g.ngens(), rel.cols());
    for (int i = 0; i < neg_r.rows(); ++i)
        for (int j = 0; j < neg_r.cols(); ++j) neg_r.at(i, j) = -rel.at(i, j);
    PolyMatrix m = PolyMatrix::hstack(PolyMatrix::hstack(a.gens(), rel), PolyMatrix::hstack(neg_b, neg_r));
    PolyMatrix k = kernel(m);
    PolyMatrix lhs = PolyMatrix::hstack(a.gens(), rel);
    PolyMatrix coeffs(lhs.cols(), k.cols());
    for (int i = 0; i < coeffs.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) coeffs.at(i, j) = k.at(i, j);
    return g.submodule(lhs * coeffs);
}

Poly missing_root_exponent(const FPModule& g, const ModElement& e) {
    if (g.is_zero(e)) throw Error(Errc::zero_element, "every exponent has a root of the identity");
    Poly order = order_ideal(g, e).generator;
    if (!order.is_zero()) {
        // exponent of the sigma-torsion part, sigma = primes of the order
        std::vector<MonicPrime> sigma;
        for (const auto& [p, mult] : factor(order).factors) sigma.push_back(p);
        Poly beta(1);
        for (const auto& p : sigma) {
            int max_mult = 0;
            for (const Poly& d : g.factors()) {
                int m = 0;
                Poly rest = d;
                while (true) {
                    auto [q, r] = divmod(rest, p.poly());
                    if (!r.is_zero()) break;
                    rest = q;
                    ++m;
                }
                max_mult = std::max(max_mult, m);
            }
            beta = beta * p.poly().pow(static_cast<unsigned>(max_mult));
        }
        return beta;
    }
    // unbounded order: push a prime power past the free coordinates
    Poly alpha = Poly::x();
    for (unsigned r = 1;; ++r) {
        Poly candidate = alpha.pow(r);
        if (!root(g, e, candidate)) return candidate;
        if (r > 4096) throw Error(Errc::internal, "no avoided exponent found");
    }
}

}  // namespace qxsep
