#ifndef FSPLIT_SPLITTING_HPP
#define FSPLIT_SPLITTING_HPP

#include <optional>
#include <string>
#include <vector>

#include <fsplit/forms.hpp>
#include <fsplit/weierstrass.hpp>

namespace fsplit
{

// w = w0 (empty means the origin), u = u0 (empty keeps u generic).
struct Point {
    std::vector<Rational> w0;
    std::vector<Cyclotomic> u0;

    bool at_origin() const;
};

// f expanded around the point: w = w0 + w', coefficients evaluated at u0.
// The truncated coefficients are treated as the polynomials they store.
// Throws NeedsExtension when w0^beta leaves the tower.
WeierstrassPoly translate_to_point(const WeierstrassPoly &f, const Point &at);

// One term c * w^beta * x^alpha * z^zdeg of a form in (w, x, z).
struct WXZTerm {
    std::vector<Rational> beta;
    std::vector<int> alpha;
    int zdeg;
    FieldElem c;
};

struct LowestPart {
    Rational degree;
    bool xz_pure = false;
    std::vector<WXZTerm> terms;

    // The (x, z) form as coefficients of z^{k-i}, i = 0..k, each a degree-i
    // x-form. Only valid when xz_pure and degree == k.
    std::vector<Form> xz_forms(int k, int m) const;
    std::string str() const;
};

// Throws TruncationInsufficient.
LowestPart lowest_homogeneous_part(const WeierstrassPoly &f, const Point &at = {});

// P[i] is the degree-i x-form multiplying z^{k-i}, P[0] = 1. Returns the
// x-parts l_i of the factors z + l_i. Throws NotReduced, NeedsExtension,
// NotAProductOfLinearForms, and NotDivisible when some roots need a ramified
// coefficient variable.
std::vector<Form> factor_linear_forms(const std::vector<Form> &P, std::int64_t cap = 64);

// x-forms of f's coefficients in the frame w = v^p up to max_degree, with
// the parts below order k set to exact zero. Row i holds a_i (a_0 = 1,
// a_1 = 0).
std::vector<std::vector<Form>> coefficient_forms(const WeierstrassPoly &f, int p, int max_degree);

struct LiftFailure {
    int degree;
};

// Root x-forms B_0..B_D for each seed. Throws SeedsNotDistinct,
// NotDivisible (the what() names the degree), CoefficientNotInvertible.
std::vector<std::vector<Form>> lift_root_forms(const std::vector<std::vector<Form>> &fa,
                                               const std::vector<Form> &seeds, int max_degree,
                                               std::int64_t cap, int *failed_degree = nullptr);

// Roots of f with the given linear parts in frame (p, q), truncated at n.
RootSystem lift_roots(const WeierstrassPoly &f, const std::vector<Form> &seeds, int p, int q, int n);

enum class SplitStatus { Split, NonSplitEvidence, NeedsExtension, TruncationInsufficient };
std::string to_string(SplitStatus s);

struct SplitResult {
    SplitStatus status = SplitStatus::NonSplitEvidence;
    std::optional<RootSystem> root_system;
    int p = 0;
    int q = 0;
    std::vector<std::string> diagnostics;
};

// Searches q = 0..q_max (outer), p = 1..p_max (inner). n = 0 uses f's
// truncation. Throws NotOrderK and MultipleWVariables.
SplitResult split(const WeierstrassPoly &f, int p_max, int q_max, int n = 0);

// prod (z + b_i) agrees with f modulo the common truncation.
bool product_matches(const WeierstrassPoly &f, const std::vector<PuiseuxSeries> &roots);

struct NcResult {
    bool nc = false;
    std::string reason;
};

NcResult is_nc(const WeierstrassPoly &f, const Point &at = {});

// pi with zeta_p . b_i = b_{pi(i)} (0-based). Throws NotClosedUnderAction.
std::vector<int> mu_p_action(const RootSystem &rs);

// v -> zeta_p v applied to a series in frame p.
PuiseuxSeries act_zeta(const PuiseuxSeries &b, int power = 1);

struct ATWProxy {
    Rational order;
    bool lowest_is_xz = false;
    bool lowest_nc = false;
};

ATWProxy atw_proxy(const WeierstrassPoly &f, const Point &at = {});

// Every (k-1)x(k-1) minor of the k x (k-1) matrix obtained by deleting one
// row is nonzero.
bool row_deleted_minors_nonzero(const std::vector<std::vector<FieldElem>> &rows);

} // namespace fsplit

#endif
