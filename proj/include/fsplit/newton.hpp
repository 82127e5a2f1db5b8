#ifndef FSPLIT_NEWTON_HPP
#define FSPLIT_NEWTON_HPP

#include <optional>
#include <vector>

#include <fsplit/laurent.hpp>

namespace fsplit
{

// Square root in the tower: rationals as tower_sqrt, and rational multiples
// of roots of unity zeta_m^j when zeta_{2m} is available.
std::optional<Cyclotomic> cyclo_sqrt(const Cyclotomic &a);

// Roots (with multiplicity) of sum coeffs[i] y^i, coefficients low to high.
// Handles rational roots, then quadratics; u-dependent coefficients only in
// degree 1 or with a square-free part of degree <= 2 having a constant
// discriminant. Throws NeedsExtension otherwise.
std::vector<FieldElem> tower_roots(const std::vector<FieldElem> &coeffs);

struct LaurentRoots {
    std::vector<LaurentSeries> roots;
    // False when some roots need a ramified variable (fractional slopes).
    bool complete = true;
};

// Simple roots in K((v)) of sum coeffs[i] z^i with valuation >= min_val.
// Inverses are capped at v^cap. Throws TruncationInsufficient when the data
// cannot separate the roots, NotReduced on an exactly repeated root and
// NeedsExtension from the residue equations.
LaurentRoots laurent_roots(const std::vector<LaurentSeries> &coeffs, std::int64_t cap,
                           std::optional<std::int64_t> min_val = std::nullopt);

LaurentSeries eval_poly(const std::vector<LaurentSeries> &coeffs, const LaurentSeries &z);

} // namespace fsplit

#endif
