#include "qxsep/instance_gen.hpp"

namespace qxsep {

namespace {

const std::vector<MonicPrime>& prime_pool() {
    static const std::vector<MonicPrime> pool = [] {
        std::vector<MonicPrime> v;
        Poly x = Poly::x();
        v.push_back(MonicPrime::unchecked(x));
        v.push_back(MonicPrime::unchecked(x - Poly(1)));
        v.push_back(MonicPrime::unchecked(x + Poly(1)));
        v.push_back(MonicPrime::unchecked(x + Poly(2)));
        v.push_back(MonicPrime::unchecked(x * x + Poly(1)));
        v.push_back(MonicPrime::unchecked(x * x - Poly(2)));
        v.push_back(MonicPrime::unchecked(x * x + x + Poly(1)));
        return v;
    }();
    return pool;
}

Poly random_prime_product(Rng& rng) {
    const auto& pool = prime_pool();
    Poly d(1);
    int nprimes = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < nprimes; ++i) {
        const MonicPrime& p = pool[rng.below(pool.size())];
        d = d * p.poly().pow(1 + static_cast<unsigned>(rng.below(2)));
    }
    return d;
}

void mix_rows(Rng& rng, PolyMatrix& m) {
    int n = m.rows();
    if (n < 2) return;
    int ops = static_cast<int>(rng.below(3));
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        if (i == j) continue;
        Poly q = rng.poly(1, 1);
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = m.at(i, c) + q * m.at(j, c);
    }
}

}  // namespace

FPModule random_module(Rng& rng, int max_gens) {
    int ngens = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_gens)));
    int ncols = static_cast<int>(rng.below(static_cast<uint64_t>(ngens) + 2));
    PolyMatrix rel(ngens, ncols);
    for (int j = 0; j < ncols; ++j) {
        if (rng.below(10) < 7) {
            rel.at(static_cast<int>(rng.below(static_cast<uint64_t>(ngens))), j) = random_prime_product(rng);
        } else {
            int touches = 1 + static_cast<int>(rng.below(2));
            for (int k = 0; k < touches; ++k)
                rel.at(static_cast<int>(rng.below(static_cast<uint64_t>(ngens))), j) = rng.poly(2, 2);
        }
    }
    mix_rows(rng, rel);
    return FPModule(ngens, std::move(rel));
}

FPModule random_torsion_module(Rng& rng, int max_gens) {
    int ngens = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_gens)));
    PolyMatrix rel(ngens, ngens);
    for (int i = 0; i < ngens; ++i) rel.at(i, i) = random_prime_product(rng);
    mix_rows(rng, rel);
    return FPModule(ngens, std::move(rel));
}

PrimeSet random_prime_set(Rng& rng) {
    const auto& pool = prime_pool();
    if (rng.below(5) == 0) {
        std::vector<MonicPrime> excluded;
        int n = 1 + static_cast<int>(rng.below(2));
        for (int i = 0; i < n; ++i) excluded.push_back(pool[rng.below(pool.size())]);
        return PrimeSet::cofinite(std::move(excluded));
    }
    std::vector<MonicPrime> primes;
    int n = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < n; ++i) primes.push_back(pool[rng.below(pool.size())]);
    return PrimeSet::explicit_set(std::move(primes));
}

GeneratedInstance generate_instance(uint64_t seed, uint64_t index) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    for (int attempt = 0; attempt < 40; ++attempt) {
        FPModule g = random_module(rng);
        PrimeSet omega = random_prime_set(rng);
        PolyMatrix h0(g.ngens(), static_cast<int>(rng.below(3)));
        for (int j = 0; j < h0.cols(); ++j)
            h0.at(static_cast<int>(rng.below(static_cast<uint64_t>(g.ngens()))), j) = rng.nonzero_poly(1, 1);
        Submodule h = isolator(g, g.submodule(std::move(h0)), omega.complement());
        for (int tries = 0; tries < 30; ++tries) {
            std::vector<Poly> coords(static_cast<size_t>(g.ngens()));
            for (auto& c : coords)
                if (rng.below(2) == 0) c = rng.poly(2, 2);
            ModElement e = g.element(std::move(coords));
            if (!g.is_zero(e) && !h.contains(e)) return {std::move(g), std::move(h), std::move(e), std::move(omega)};
        }
    }
    // deterministic fallback: a free module separates everything
    FPModule g(2, PolyMatrix(2, 0));
    Submodule h = g.trivial_submodule();
    ModElement e = g.element({Poly(1), Poly()});
    return {std::move(g), std::move(h), std::move(e), PrimeSet::explicit_set({prime_pool()[0]})};
}

}  // namespace qxsep
