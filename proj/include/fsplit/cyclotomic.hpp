#ifndef FSPLIT_CYCLOTOMIC_HPP
#define FSPLIT_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include <fsplit/rational.hpp>

namespace fsplit
{

// Element of Q(zeta_n), stored as a residue modulo the n-th cyclotomic
// polynomial in the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
//
// Values are kept in the smallest cyclotomic subfield that contains them, so
// two equal elements always have identical (order, coeffs). Arithmetic
// between different orders takes place in Q(zeta_lcm).
class Cyclotomic
{
public:
    static constexpr int max_order = 24;

    Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
    Cyclotomic(const Rational &q) : order_(1), coeffs_{q} {}
    Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}

    // Throws NeedsExtension when n exceeds max_order.
    static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);
    // zeta_n^power.
    static Cyclotomic zeta(int n, long power = 1);

    int order() const noexcept
    {
        return order_;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const noexcept
    {
        return order_ == 1;
    }
    // Only meaningful when is_rational().
    const Rational &rational() const
    {
        return coeffs_[0];
    }

    // Image under Q(zeta_n) -> Q(zeta_m), n | m. The returned coefficient
    // vector has length phi(m) (not canonicalized to the minimal order).
    std::vector<Rational> coeffs_in(int m) const;

    Cyclotomic inverse() const;

    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b);
    Cyclotomic operator-() const;

    Cyclotomic &operator+=(const Cyclotomic &o)
    {
        return *this = *this + o;
    }
    Cyclotomic &operator-=(const Cyclotomic &o)
    {
        return *this = *this - o;
    }
    Cyclotomic &operator*=(const Cyclotomic &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b)
    {
        return !(a == b);
    }

    // Deterministic total order on canonical representations; used only for
    // reproducible sorting, it has no algebraic meaning.
    friend bool canonical_less(const Cyclotomic &a, const Cyclotomic &b);

    std::string str() const;

private:
    Cyclotomic(int n, std::vector<Rational> c, bool) : order_(n), coeffs_(std::move(c)) {}
    void canonicalize();

    int order_;
    std::vector<Rational> coeffs_;
};

// Euler totient.
int totient(int n);
// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<Rational> &cyclotomic_polynomial(int n);

// Canonical embedding Q(zeta_n) -> Q(zeta_m). Throws IncompatibleOrders
// unless n | m; the result is canonical, i.e. expressed in its minimal field.
Cyclotomic embed_cyclotomic(const Cyclotomic &e, int target_order);

// Square root inside the supported tower: rationals q whose field Q(sqrt q)
// has conductor <= 24, built from Gauss sums; anything else yields nullopt.
std::optional<Cyclotomic> tower_sqrt(const Cyclotomic &a);

} // namespace fsplit

#endif
