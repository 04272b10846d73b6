#ifndef QXSEP_INSTANCE_GEN_HPP
#define QXSEP_INSTANCE_GEN_HPP

#include <cstdint>

#include "qxsep/rng.hpp"
#include "qxsep/sep.hpp"

namespace qxsep {

// A ready-to-separate instance: H is omega'-isolated in G and g lies
// outside H, so separate(G, H, g, omega) must succeed.
struct GeneratedInstance {
    FPModule module;
    Submodule subgroup;
    ModElement element;
    PrimeSet omega;
};

// Pure function of (seed, index); drives the CLI `gen` subcommand and the
// randomized pipeline checks.
GeneratedInstance generate_instance(uint64_t seed, uint64_t index);

// Random module generation shared with the test suites.
FPModule random_module(Rng& rng, int max_gens = 4);
FPModule random_torsion_module(Rng& rng, int max_gens = 4);
PrimeSet random_prime_set(Rng& rng);

}  // namespace qxsep

#endif
