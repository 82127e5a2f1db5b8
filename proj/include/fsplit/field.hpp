#ifndef FSPLIT_FIELD_HPP
#define FSPLIT_FIELD_HPP

#include <map>
#include <string>
#include <vector>

#include <fsplit/cyclotomic.hpp>

namespace fsplit
{

// Exponent vector in the parameters u_1..u_s. Trailing zeros are always
// trimmed, so a constant monomial is the empty vector and polynomials in
// different numbers of parameters mix freely.
using UMonomial = std::vector<int>;

// Graded lexicographic comparison with u_1 > u_2 > ...
struct GrlexLess {
    bool operator()(const UMonomial &a, const UMonomial &b) const;
};

// Sparse multivariate polynomial in u with Q(zeta_n) coefficients. Terms are
// stored in increasing grlex order, so the leading term is the last one.
class UPolynomial
{
public:
    using TermMap = std::map<UMonomial, Cyclotomic, GrlexLess>;

    UPolynomial() = default;
    UPolynomial(const Cyclotomic &c);
    static UPolynomial variable(std::size_t index, int power = 1);
    static UPolynomial from_terms(const std::vector<std::pair<UMonomial, Cyclotomic>> &terms);

    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Cyclotomic constant_value() const;
    const UMonomial &leading_monomial() const;
    const Cyclotomic &leading_coefficient() const;
    // Highest index of a parameter that appears, plus one.
    std::size_t num_vars() const;
    int degree_in(std::size_t var) const;

    friend UPolynomial operator+(const UPolynomial &a, const UPolynomial &b);
    friend UPolynomial operator-(const UPolynomial &a, const UPolynomial &b);
    friend UPolynomial operator*(const UPolynomial &a, const UPolynomial &b);
    UPolynomial operator-() const;
    UPolynomial scaled(const Cyclotomic &c) const;

    friend bool operator==(const UPolynomial &a, const UPolynomial &b)
    {
        return a.terms_ == b.terms_;
    }

    // Exact quotient; throws NotDivisible when b does not divide a.
    static UPolynomial exact_div(const UPolynomial &a, const UPolynomial &b);
    // Monic (under grlex) greatest common divisor; gcd(0, 0) = 0.
    static UPolynomial gcd(const UPolynomial &a, const UPolynomial &b);

    Cyclotomic evaluate(const std::vector<Cyclotomic> &point) const;

    std::string str() const;

private:
    void add_term(const UMonomial &m, const Cyclotomic &c);

    TermMap terms_;
};

// Element of Q(zeta_n)(u_1..u_s), kept as a reduced fraction whose
// denominator has grlex leading coefficient 1.
class FieldElem
{
public:
    FieldElem() : den_(Cyclotomic(1)) {}
    FieldElem(const Cyclotomic &c) : num_(c), den_(Cyclotomic(1)) {}
    FieldElem(const Rational &q) : FieldElem(Cyclotomic(q)) {}
    FieldElem(long v) : FieldElem(Cyclotomic(v)) {}
    FieldElem(const UPolynomial &p) : num_(p), den_(Cyclotomic(1)) {}
    // Throws DivisionByZero when den is zero.
    FieldElem(const UPolynomial &num, const UPolynomial &den);

    static FieldElem u(std::size_t index, int power = 1)
    {
        return FieldElem(UPolynomial::variable(index, power));
    }

    const UPolynomial &num() const noexcept
    {
        return num_;
    }
    const UPolynomial &den() const noexcept
    {
        return den_;
    }

    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_one() const;
    // True when no parameter u occurs.
    bool is_constant() const noexcept
    {
        return num_.is_constant() && den_.is_constant();
    }
    // Requires is_constant().
    Cyclotomic constant_value() const;

    FieldElem inverse() const;

    friend FieldElem operator+(const FieldElem &a, const FieldElem &b);
    friend FieldElem operator-(const FieldElem &a, const FieldElem &b);
    friend FieldElem operator*(const FieldElem &a, const FieldElem &b);
    friend FieldElem operator/(const FieldElem &a, const FieldElem &b);
    FieldElem operator-() const;
    FieldElem &operator+=(const FieldElem &o)
    {
        return *this = *this + o;
    }
    FieldElem &operator-=(const FieldElem &o)
    {
        return *this = *this - o;
    }
    FieldElem &operator*=(const FieldElem &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const FieldElem &a, const FieldElem &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FieldElem &a, const FieldElem &b)
    {
        return !(a == b);
    }

    // Substitute u = point; throws DivisionByZero if the denominator
    // vanishes there.
    Cyclotomic evaluate(const std::vector<Cyclotomic> &point) const;

    std::string str() const;

private:
    void reduce();

    UPolynomial num_;
    UPolynomial den_;
};

// Reproducible (non-algebraic) ordering of canonical forms.
bool canonical_less(const FieldElem &a, const FieldElem &b);

enum class FieldOp { add, sub, mul, div };
FieldElem field_arith(const FieldElem &a, const FieldElem &b, FieldOp op);

} // namespace fsplit

#endif
