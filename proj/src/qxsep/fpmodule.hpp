#ifndef QXSEP_FPMODULE_HPP
#define QXSEP_FPMODULE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qxsep/matrix.hpp"
#include "qxsep/primeset.hpp"

namespace qxsep {

// Element of a finitely presented module, as coordinates in the
// presentation generators. Always stored canonically reduced; build through
// FPModule::element so two equal classes compare equal field by field.
struct ModElement {
    std::vector<Poly> coords;

    bool operator==(const ModElement& o) const { return coords == o.coords; }
    bool operator!=(const ModElement& o) const { return coords != o.coords; }
};

class Submodule;

// Finitely presented module over Q[x]: ngens generators subject to the
// column lattice of the relation matrix. The Smith data of the relations is
// computed once at construction; everything afterwards is a pure read.
class FPModule {
  public:
    FPModule(int ngens, PolyMatrix relations);

    int ngens() const;
    const PolyMatrix& relations() const;

    // Invariant factors d_1 | d_2 | ... (monic, non-unit) and the free rank.
    const std::vector<Poly>& factors() const;
    int rank() const;
    bool is_trivial() const { return factors().empty() && rank() == 0; }

    ModElement element(std::vector<Poly> coords) const;
    ModElement zero() const;
    bool is_zero(const ModElement& e) const;
    ModElement add(const ModElement& a, const ModElement& b) const;
    ModElement neg(const ModElement& a) const;
    ModElement scale(const ModElement& a, const Poly& alpha) const;

    // Coordinates in the decomposed presentation: one entry per invariant
    // factor (reduced modulo it) followed by one per free summand. Elements
    // are equal iff their decomposed coordinates agree.
    std::vector<Poly> to_decomposed(const ModElement& e) const;
    ModElement from_decomposed(const std::vector<Poly>& w) const;
    // Preimage of the i-th cyclic summand generator / j-th free generator.
    ModElement cyclic_generator(int i) const;
    ModElement free_generator(int j) const;

    Submodule submodule(PolyMatrix gens) const;
    Submodule trivial_submodule() const;
    Submodule full_submodule() const;

    // Presentation equality; used for ambient checks.
    bool operator==(const FPModule& o) const;
    bool operator!=(const FPModule& o) const { return !(*this == o); }

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Submodule of an FPModule spanned by the columns of gens (plus, always,
// the relation lattice). Canonical form makes equality decidable.
class Submodule {
  public:
    const FPModule& ambient() const { return ambient_; }
    const PolyMatrix& gens() const { return gens_; }
    const PolyMatrix& canonical() const { return canon_.h; }

    bool contains(const ModElement& e) const;
    bool operator==(const Submodule& o) const;
    bool operator!=(const Submodule& o) const { return !(*this == o); }

  private:
    friend class FPModule;
    Submodule(FPModule ambient, PolyMatrix gens, HermiteForm canon)
        : ambient_(std::move(ambient)), gens_(std::move(gens)), canon_(std::move(canon)) {}
    FPModule ambient_;
    PolyMatrix gens_;
    HermiteForm canon_;  // hnf of [gens | relations]
};

// Principal ideal of Q[x]; generator monic, or zero, or one.
struct Ideal {
    Poly generator;
    bool operator==(const Ideal& o) const { return generator == o.generator; }
};

struct Quotient {
    FPModule group;
    ModElement project(const ModElement& e) const { return group.element(e.coords); }
};

std::pair<std::vector<Poly>, int> canonical_decomposition(const FPModule& g);
Ideal order_ideal(const FPModule& g, const ModElement& e);
Ideal exponent_ideal(const FPModule& g);
Submodule torsion(const FPModule& g);
Submodule omega_torsion(const FPModule& g, const PrimeSet& omega);
Submodule primary_component(const FPModule& g, const MonicPrime& pi);
Quotient quotient(const FPModule& g, const Submodule& n);
Submodule power_subgroup(const FPModule& g, const Poly& alpha);
std::optional<ModElement> root(const FPModule& g, const ModElement& e, const Poly& alpha);
int height(const FPModule& g, const ModElement& e, const MonicPrime& pi);
bool is_finite_omega_type(const FPModule& g, const PrimeSet& omega);

Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);

// An exponent beta with no beta-th root of e in g (e nonzero); for torsion
// e this is the explicit exponent of the relevant primary part, for
// unbounded e a high enough prime power.
Poly missing_root_exponent(const FPModule& g, const ModElement& e);

}  // namespace qxsep

#endif
