#ifndef FSPLIT_WEIERSTRASS_HPP
#define FSPLIT_WEIERSTRASS_HPP

#include <optional>
#include <utility>
#include <vector>

#include <fsplit/laurent.hpp>
#include <fsplit/series.hpp>

namespace fsplit
{

// z^k + a_2 z^{k-2} + ... + a_k. There is no slot for a_1.
class WeierstrassPoly
{
public:
    // a holds a_2..a_k. Throws InvalidParams or DimensionMismatch.
    WeierstrassPoly(int k, std::vector<PuiseuxSeries> a, int r = 1, int num_x = -1, int s = 0);

    int k() const noexcept
    {
        return k_;
    }
    int r() const noexcept
    {
        return r_;
    }
    int num_x() const noexcept
    {
        return m_;
    }
    int s() const noexcept
    {
        return s_;
    }
    // a_j for 2 <= j <= k.
    const PuiseuxSeries &a(int j) const;
    const std::vector<PuiseuxSeries> &coeffs() const noexcept
    {
        return a_;
    }
    int trunc() const;

    // z^k + sum_j a_j z^{k-j} at z = value.
    PuiseuxSeries evaluate(const PuiseuxSeries &value) const;
    WeierstrassPoly map_coeffs(const std::function<PuiseuxSeries(int j, const PuiseuxSeries &)> &fn) const;

    friend bool operator==(const WeierstrassPoly &, const WeierstrassPoly &) = default;

    std::string str() const;

private:
    int k_;
    int r_;
    int m_;
    int s_;
    std::vector<PuiseuxSeries> a_;
};

bool equal_mod_trunc(const WeierstrassPoly &f, const WeierstrassPoly &g);

// Roots b_1..b_k of f = prod (z + b_i) with the linear data b_ij (as series
// in v = w^{1/p}) and d_i = min_j val_v b_ij.
struct RootSystem {
    int p = 1;
    int q = 0;
    std::vector<PuiseuxSeries> roots;
    std::vector<std::vector<LaurentSeries>> bij;
    // Absent when some root has no known linear part.
    std::optional<std::vector<int>> d_values;

    // Throws DegenerateLinearPart.
    const std::vector<int> &d() const;
    // b~_ij = v^{-d_i} b_ij.
    LaurentSeries reduced(std::size_t i, std::size_t j) const;
};

// Brings roots to a common frame, extracts b_ij and d_i (r = 1 only).
RootSystem make_root_system(std::vector<PuiseuxSeries> roots);

// Roots ordered by support_min, then by their coefficients.
void sort_roots(std::vector<PuiseuxSeries> &roots);

// sigma_j(values). Throws IndexOutOfRange.
PuiseuxSeries elementary_symmetric(int j, const std::vector<PuiseuxSeries> &values);

// b_k = -(b_1 + ... + b_{k-1}), a_j = sigma_j(b). Throws NonzeroConstantTerm.
std::pair<WeierstrassPoly, RootSystem> from_roots(const std::vector<PuiseuxSeries> &roots, int s = 0);

// z^k + c_1 z^{k-1} + ... + c_k with c = {c_1..c_k}. Returns the normal form
// after z -> z - c_1/k together with the shift c_1/k.
std::pair<WeierstrassPoly, PuiseuxSeries> tschirnhaus_normalize(const std::vector<PuiseuxSeries> &c, int s = 0);

struct FormFlags {
    bool in_ideal;
    bool order_k;
};
FormFlags assert_form(const WeierstrassPoly &f);

} // namespace fsplit

#endif
