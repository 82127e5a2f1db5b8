#ifndef FSPLIT_LAURENT_HPP
#define FSPLIT_LAURENT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include <fsplit/field.hpp>

namespace fsplit
{

// Laurent series in one variable v (standing for w^{1/p}) with an absolute
// precision: the value is known modulo v^prec. Exact values carry
// prec == LaurentSeries::exact.
//
// Precision propagates through arithmetic the usual p-adic way, so results
// never claim more than the inputs determine.
class LaurentSeries
{
public:
    static constexpr std::int64_t exact = std::int64_t(1) << 40;
    using TermMap = std::map<std::int64_t, FieldElem>;

    LaurentSeries() : prec_(exact) {}
    LaurentSeries(const FieldElem &c, std::int64_t prec = exact);
    static LaurentSeries monomial(const FieldElem &c, std::int64_t e, std::int64_t prec = exact);
    static LaurentSeries from_terms(TermMap terms, std::int64_t prec);
    // Zero known modulo v^prec.
    static LaurentSeries zero(std::int64_t prec)
    {
        LaurentSeries s;
        s.prec_ = prec;
        return s;
    }

    std::int64_t prec() const noexcept
    {
        return prec_;
    }
    bool is_exact() const noexcept
    {
        return prec_ >= exact;
    }
    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    // No nonzero coefficient is known (the value is 0 mod v^prec).
    bool known_zero() const noexcept
    {
        return terms_.empty();
    }
    std::optional<std::int64_t> valuation() const;
    // Valuation, or prec when nothing nonzero is known.
    std::int64_t val_eff() const;
    FieldElem coeff(std::int64_t e) const;

    LaurentSeries truncated(std::int64_t prec) const;
    // Multiply by v^k.
    LaurentSeries shifted(std::int64_t k) const;
    LaurentSeries map_coeffs(const std::function<FieldElem(std::int64_t, const FieldElem &)> &fn) const;

    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
    LaurentSeries operator-() const;
    LaurentSeries &operator+=(const LaurentSeries &o)
    {
        return *this = *this + o;
    }
    LaurentSeries &operator-=(const LaurentSeries &o)
    {
        return *this = *this - o;
    }

    // 1/a known to at most v^cap. Throws CoefficientNotInvertible when no
    // nonzero term is known.
    LaurentSeries inverse(std::int64_t cap) const;
    LaurentSeries divided(const LaurentSeries &b, std::int64_t cap) const
    {
        return *this * b.inverse(cap);
    }

    // Equal on every exponent below min(prec).
    friend bool agree(const LaurentSeries &a, const LaurentSeries &b);
    // Same terms and same precision.
    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b)
    {
        return a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    TermMap terms_;
    std::int64_t prec_;
};

std::int64_t sat_add(std::int64_t a, std::int64_t b);

} // namespace fsplit

#endif
