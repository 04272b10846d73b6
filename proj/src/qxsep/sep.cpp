#include "qxsep/sep.hpp"

#include <algorithm>

#include "qxsep/rng.hpp"

namespace qxsep {

namespace {

int prime_multiplicity(const Poly& d, const MonicPrime& pi) {
    int m = 0;
    Poly rest = d;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, pi.poly());
        if (!r.is_zero()) break;
        rest = q;
        ++m;
    }
    return m;
}

// exponent of tau_pi as a power of pi
int primary_exponent(const FPModule& g, const MonicPrime& pi) {
    int t = 0;
    for (const Poly& d : g.factors()) t = std::max(t, prime_multiplicity(d, pi));
    return t;
}

PolyMatrix scalar_matrix(int n, const Poly& alpha) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = alpha;
    return m;
}

}  // namespace

IsolationReport is_isolated(const FPModule& g, const Submodule& h, const PrimeSet& sigma) {
    if (h.ambient() != g) throw Error(Errc::ambient_mismatch, "subgroup lives in a different module");
    Quotient q = quotient(g, h);
    for (int i = 0; i < static_cast<int>(q.group.factors().size()); ++i) {
        const Poly& d = q.group.factors()[static_cast<size_t>(i)];
        for (const auto& [p, e] : factor(d).factors) {
            if (!sigma.contains(p)) continue;
            // an element of order p in G/H, pulled back to G
            ModElement in_q = q.group.scale(q.group.cyclic_generator(i), exact_div(d, p.poly()));
            IsolationReport report;
            report.isolated = false;
            report.violating_element = g.element(in_q.coords);
            report.violating_exponent = p.poly();
            return report;
        }
    }
    IsolationReport report;
    report.isolated = true;
    return report;
}

Submodule isolator(const FPModule& g, const Submodule& h, const PrimeSet& sigma) {
    if (h.ambient() != g) throw Error(Errc::ambient_mismatch, "subgroup lives in a different module");
    Quotient q = quotient(g, h);
    Submodule tau = omega_torsion(q.group, sigma);
    return g.submodule(PolyMatrix::hstack(tau.gens(), h.gens()));
}

ResidualReport is_residually_ftomega(const FPModule& g, const PrimeSet& omega) {
    for (int i = 0; i < static_cast<int>(g.factors().size()); ++i) {
        const Poly& d = g.factors()[static_cast<size_t>(i)];
        for (const auto& [p, e] : factor(d).factors) {
            if (omega.contains(p)) continue;
            ResidualReport report;
            report.residually_ft_omega = false;
            report.obstruction = g.scale(g.cyclic_generator(i), exact_div(d, p.poly()));
            return report;
        }
    }
    ResidualReport report;
    report.residually_ft_omega = true;
    return report;
}

SeparabilityWitness separate(const FPModule& g, const Submodule& h, const ModElement& elt,
                             const PrimeSet& omega) {
    if (h.ambient() != g) throw Error(Errc::not_in_ambient, "subgroup lives in a different module");
    if (static_cast<int>(elt.coords.size()) != g.ngens())
        throw Error(Errc::not_in_ambient, "element coordinate count mismatch");
    ModElement e = g.element(elt.coords);
    if (h.contains(e)) throw Error(Errc::element_in_subgroup, "element already lies in the subgroup");
    IsolationReport iso = is_isolated(g, h, omega.complement());
    if (!iso.isolated) throw NotIsolatedError(std::move(iso));

    Quotient q = quotient(g, h);
    ModElement eq = q.project(e);
    Poly order = order_ideal(q.group, eq).generator;

    std::optional<Submodule> n;
    if (order.is_zero()) {
        // unbounded order: find r with e outside the alpha^r power subgroup
        MonicPrime alpha = omega.first_prime();
        unsigned r = 1;
        while (true) {
            Submodule cand = g.submodule(
                PolyMatrix::hstack(scalar_matrix(g.ngens(), alpha.poly().pow(r)), h.gens()));
            if (!cand.contains(e)) {
                n = std::move(cand);
                break;
            }
            if (r > 4096) throw Error(Errc::internal, "no avoiding power found for unbounded element");
            ++r;
        }
    } else {
        Factorization of = factor(order);
        MonicPrime pi = of.factors.front().first;  // smallest prime of the order
        if (of.factors.size() == 1) {
            // prime power order: quotient by the pi^t power subgroup,
            // pi^t the exponent of the pi-primary part of G/H
            int t = primary_exponent(q.group, pi);
            n = g.submodule(PolyMatrix::hstack(
                scalar_matrix(g.ngens(), pi.poly().pow(static_cast<unsigned>(t))), h.gens()));
        } else {
            // composite order: kill all non-pi torsion first, then reduce to
            // the prime power case in the smaller quotient
            Submodule other_torsion = omega_torsion(q.group, PrimeSet::cofinite({pi}));
            Quotient qbar = quotient(q.group, other_torsion);
            int t = primary_exponent(qbar.group, pi);
            PolyMatrix gens = PolyMatrix::hstack(
                scalar_matrix(g.ngens(), pi.poly().pow(static_cast<unsigned>(t))),
                PolyMatrix::hstack(other_torsion.gens(), h.gens()));
            n = g.submodule(std::move(gens));
        }
        if (n->contains(e)) throw Error(Errc::internal, "separating subgroup swallowed the element");
    }

    SeparabilityWitness w{g, h, e, *n, quotient(g, *n).group.factors(), omega};
    return w;
}

bool verify_witness(const SeparabilityWitness& w) {
    try {
        const PolyMatrix& rel = w.module.relations();
        if (rel.rows() != w.module.ngens()) return false;
        if (w.separating.gens().rows() != rel.rows() || w.subgroup.gens().rows() != rel.rows()) return false;
        if (static_cast<int>(w.element.coords.size()) != rel.rows()) return false;

        // (a) invariant factors of G/N, recomputed from the raw matrices
        SmithForm sf = snf(PolyMatrix::hstack(rel, w.separating.gens()));
        if (sf.invariant_factors() != w.quotient_factors) return false;
        if (sf.rank() != rel.rows()) return false;  // free rank must vanish

        // (b) finite omega-type: every prime of every factor lies in omega
        for (const Poly& d : sf.invariant_factors())
            for (const auto& [p, e] : factor(d).factors)
                if (!w.omega.contains(p)) return false;

        // (c) g outside HN
        PolyMatrix hn = PolyMatrix::hstack(PolyMatrix::hstack(w.subgroup.gens(), w.separating.gens()), rel);
        if (member(hn, w.element.coords)) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

RestrictedSeriesReport check_omega_restricted_series(const std::vector<FPModule>& series_factors,
                                                     const PrimeSet& omega, uint64_t seed) {
    RestrictedSeriesReport report;
    Rng rng(seed);
    for (const FPModule& f : series_factors) {
        std::vector<RestrictedSample> samples;
        std::vector<PolyMatrix> sampled;
        sampled.push_back(PolyMatrix(f.ngens(), 0));  // N = 1
        for (int s = 0; s < 2; ++s) {
            PolyMatrix gens(f.ngens(), 1 + static_cast<int>(rng.below(2)));
            for (int i = 0; i < gens.rows(); ++i)
                for (int j = 0; j < gens.cols(); ++j) gens.at(i, j) = rng.poly(2, 2);
            sampled.push_back(std::move(gens));
        }
        for (const PolyMatrix& gens : sampled) {
            Quotient q = quotient(f, f.submodule(gens));
            std::vector<MonicPrime> relevant;
            for (const Poly& d : q.group.factors())
                for (const auto& [p, mult] : factor(d).factors)
                    if (omega.contains(p) && std::find(relevant.begin(), relevant.end(), p) == relevant.end())
                        relevant.push_back(p);
            for (const MonicPrime& p : relevant) {
                // invariant factors of tau_p(F/N): the ascending p-parts
                std::vector<Poly> tau_factors;
                for (const Poly& dd : q.group.factors()) {
                    int m = prime_multiplicity(dd, p);
                    if (m > 0) tau_factors.push_back(p.poly().pow(static_cast<unsigned>(m)));
                }
                samples.push_back({p, gens, std::move(tau_factors)});
            }
        }
        report.per_factor.push_back(std::move(samples));
    }
    report.restricted = true;  // finitely presented factors always are; samples are the evidence
    return report;
}

}  // namespace qxsep
