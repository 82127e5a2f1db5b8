#ifndef FSPLIT_SERIES_HPP
#define FSPLIT_SERIES_HPP

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <fsplit/field.hpp>

namespace fsplit
{

// Exponent of x^alpha w^beta. beta entries share the denominator p of the
// series they come from.
struct ExpPair {
    std::vector<int> alpha;
    std::vector<Rational> beta;

    int alpha_total() const;
    Rational beta_total() const;
    friend bool operator==(const ExpPair &, const ExpPair &) = default;
};

// lex(|alpha| + |beta|, |alpha|, alpha). Throws DimensionMismatch.
std::strong_ordering compare_support(const ExpPair &a, const ExpPair &b);

enum class Grading { x_only, xz_total, internal };

// Truncated series in w_1..w_r (exponents in (1/p)Z) and x_1..x_m with
// poles in w bounded by w^{-q|alpha|}.
//
// Stored with integer exponents in v_j = w_j^{1/p} and x'_i = x_i / (v_1...v_r)^{pq};
// a key is [a_1..a_r, c_1..c_m] and all a_j >= 0. Every term of internal
// degree sum(a) + sum(c) <= trunc is stored, none above.
class PuiseuxSeries
{
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, FieldElem>;

    PuiseuxSeries(int r = 1, int num_x = 1, int p = 1, int q = 0, int trunc = 8);

    static PuiseuxSeries constant(int r, int num_x, const FieldElem &c, int trunc = 8);
    static PuiseuxSeries x(int r, int num_x, int i, int trunc = 8);
    static PuiseuxSeries w(int r, int num_x, int j, int trunc = 8);
    // Throws PoleBound or InvalidParams (beta not over p).
    static PuiseuxSeries from_pairs(int r, int num_x, int p, int q, int trunc,
                                    const std::vector<std::pair<ExpPair, FieldElem>> &terms);
    static PuiseuxSeries from_internal(int r, int num_x, int p, int q, int trunc, const TermMap &terms);

    int r() const noexcept
    {
        return r_;
    }
    int num_x() const noexcept
    {
        return m_;
    }
    int p() const noexcept
    {
        return p_;
    }
    int q() const noexcept
    {
        return q_;
    }
    int trunc() const noexcept
    {
        return trunc_;
    }
    const TermMap &internal_terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    ExpPair pair_of(const Exps &e) const;
    Exps internal_of(const ExpPair &e) const;
    static int internal_degree(const Exps &e);
    // Terms in ascending support order.
    std::vector<std::pair<ExpPair, FieldElem>> terms() const;
    FieldElem coeff(const ExpPair &e) const;

    // Same series in frame (p, q); p must be a multiple of p(), q >= q().
    PuiseuxSeries reframed(int p, int q) const;
    PuiseuxSeries truncated(int trunc) const;
    PuiseuxSeries scaled(const FieldElem &c) const;
    PuiseuxSeries map_terms(const std::function<FieldElem(const Exps &, const FieldElem &)> &fn) const;

    friend PuiseuxSeries operator+(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator-(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b);
    PuiseuxSeries operator-() const;
    PuiseuxSeries &operator+=(const PuiseuxSeries &o)
    {
        return *this = *this + o;
    }
    PuiseuxSeries &operator*=(const PuiseuxSeries &o)
    {
        return *this = *this * o;
    }

    // Identical frame, truncation and terms.
    friend bool operator==(const PuiseuxSeries &a, const PuiseuxSeries &b) = default;

    std::optional<Rational> valuation(Grading g) const;
    // Throws NotAUnit.
    PuiseuxSeries invert_unit() const;
    // Throws ZeroSeries.
    ExpPair support_min() const;

    std::string str() const;

private:
    void check_dims(const PuiseuxSeries &o) const;
    void insert(Exps e, const FieldElem &c);

    int r_;
    int m_;
    int p_;
    int q_;
    int trunc_;
    TermMap terms_;
};

// Common frame: lcm of p, max of q, min of trunc.
void unify_frames(PuiseuxSeries &a, PuiseuxSeries &b);

// Equal on the common truncation after unifying frames.
bool equal_mod_trunc(const PuiseuxSeries &a, const PuiseuxSeries &b);

// Replace x_i by assignment[i] for each entry. Every replacement needs
// internal order >= 1; if f has q > 0 each replacement term must involve x.
// Throws TruncationLoss, PoleBound or DimensionMismatch.
PuiseuxSeries substitute(const PuiseuxSeries &f, const std::map<int, PuiseuxSeries> &assignment);

} // namespace fsplit

#endif
