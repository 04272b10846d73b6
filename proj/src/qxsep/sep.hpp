#ifndef QXSEP_SEP_HPP
#define QXSEP_SEP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qxsep/error.hpp"
#include "qxsep/fpmodule.hpp"

namespace qxsep {

struct IsolationReport {
    bool isolated = false;
    // when not isolated: an element outside H whose sigma-member power lands in H
    std::optional<ModElement> violating_element;
    std::optional<Poly> violating_exponent;
};

class NotIsolatedError : public Error {
  public:
    explicit NotIsolatedError(IsolationReport report)
        : Error(Errc::not_isolated, "subgroup is not isolated against the complement prime set"),
          report_(std::move(report)) {}
    const IsolationReport& report() const { return report_; }

  private:
    IsolationReport report_;
};

// Certificate that g can be separated from H by a finite omega-type
// quotient: G/N has the listed invariant factors, all of whose primes lie
// in omega, and g stays outside HN.
struct SeparabilityWitness {
    FPModule module;
    Submodule subgroup;      // H
    ModElement element;      // g
    Submodule separating;    // N
    std::vector<Poly> quotient_factors;
    PrimeSet omega;
};

// H is sigma-isolated iff G/H has no sigma-torsion.
IsolationReport is_isolated(const FPModule& g, const Submodule& h, const PrimeSet& sigma);

// Smallest sigma-isolated submodule containing H: the preimage of the
// sigma-torsion of G/H.
Submodule isolator(const FPModule& g, const Submodule& h, const PrimeSet& sigma);

struct ResidualReport {
    bool residually_ft_omega = false;
    // when false: a nonzero element killed only by omega'-members
    std::optional<ModElement> obstruction;
};

ResidualReport is_residually_ftomega(const FPModule& g, const PrimeSet& omega);

// Constructs a separability witness for g outside H. Requires H to be
// omega'-isolated (otherwise no finite omega-type quotient can separate and
// NotIsolatedError carries the evidence).
SeparabilityWitness separate(const FPModule& g, const Submodule& h, const ModElement& elt,
                             const PrimeSet& omega);

// From-scratch check of a witness using only factor/snf/member primitives;
// shares no logic with separate(). False on malformed data, never throws.
bool verify_witness(const SeparabilityWitness& w);

struct RestrictedSample {
    MonicPrime pi;
    PolyMatrix sampled_gens;           // generators of the sampled N
    std::vector<Poly> tau_pi_factors;  // invariant factors of tau_pi(F/N)
};

struct RestrictedSeriesReport {
    bool restricted = true;
    std::vector<std::vector<RestrictedSample>> per_factor;
};

// Evidence that each abelian factor of a central series is omega-restricted:
// for sampled quotients F/N, the omega-primary parts are finitely presented
// with the listed invariant factors.
RestrictedSeriesReport check_omega_restricted_series(const std::vector<FPModule>& series_factors,
                                                     const PrimeSet& omega, uint64_t seed = 1);

}  // namespace qxsep

#endif
