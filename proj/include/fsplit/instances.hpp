#ifndef FSPLIT_INSTANCES_HPP
#define FSPLIT_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <fsplit/random.hpp>
#include <fsplit/weierstrass.hpp>

namespace fsplit
{

enum class InstanceMode { roots, coeffs };

// An input to the pipeline. In roots mode the payload lists b_1..b_{k-1}
// as polynomials (b_k = -sum); in coeffs mode it lists a_2..a_k.
struct Instance {
    int k = 2;
    int r = 1;
    int s = 0;
    int p = 1;
    int q = 0;
    int trunc = 8;
    InstanceMode mode = InstanceMode::coeffs;
    std::vector<PuiseuxSeries> payload;
    std::optional<std::string> label;
    std::optional<std::uint64_t> seed;

    // Throws InvalidParams, NonzeroConstantTerm, DimensionMismatch.
    void validate() const;
    // f with every coefficient in its smallest frame, truncated at trunc.
    WeierstrassPoly poly() const;
    // All k roots in roots mode.
    std::vector<PuiseuxSeries> roots() const;
};

// Smallest (p, q) frame holding s, with the largest truncation the data
// still determines.
PuiseuxSeries reduce_frame(const PuiseuxSeries &s);

// whitney, nc3, qpole, mu3. Throws InvalidParams.
Instance preset(const std::string &name, int trunc = 8);
std::vector<std::string> preset_names();

struct RandomSpec {
    int k = 2;
    int r = 1;
    int s = 0;
    int p = 1;
    int q = 0;
    int trunc = 8;
    // Maximal x-degree of a root term.
    int degree = 3;
};

// Roots mode instance, deterministic in seed. With r = 1 and p <= k the
// roots come in mu_p orbits so f has integral w-exponents; linear parts
// are distinct. Throws InvalidParams.
Instance random_instance(const RandomSpec &spec, std::uint64_t seed);

// p = 1, q = 0 instance whose lowest part is nc(k): constant linear parts
// with every row-deleted minor nonzero, higher terms of degree >= 2.
Instance random_proxy_true(int k, int s, int trunc, std::uint64_t seed);

// Instances violating the proxy at the origin, cycling through several
// families by seed.
Instance random_proxy_false(int k, int s, int trunc, std::uint64_t seed);

} // namespace fsplit

#endif
