#ifndef FSPLIT_FORMS_HPP
#define FSPLIT_FORMS_HPP

#include <map>
#include <string>
#include <vector>

#include <fsplit/laurent.hpp>
#include <fsplit/series.hpp>

namespace fsplit
{

using XMonomial = std::vector<int>;

// Lex with variable 0 highest; iteration visits the leading monomial first.
struct LexGreater {
    bool operator()(const XMonomial &a, const XMonomial &b) const
    {
        return a > b;
    }
};

// All monomials of total degree d in n variables, lex-descending.
std::vector<XMonomial> monomials_of_degree(int n, int d);

// Homogeneous form over v-Laurent coefficients. Absent monomials have
// coefficient O(v^prec); stored coefficients are truncated to prec.
class Form
{
public:
    using TermMap = std::map<XMonomial, LaurentSeries, LexGreater>;

    Form(int nvars = 1, int degree = 0, std::int64_t prec = LaurentSeries::exact);
    static Form from_terms(int nvars, int degree, const TermMap &terms, std::int64_t prec = LaurentSeries::exact);
    // sum_j coeffs[j] * var_j
    static Form linear(const std::vector<LaurentSeries> &coeffs);

    int nvars() const noexcept
    {
        return n_;
    }
    int degree() const noexcept
    {
        return d_;
    }
    std::int64_t prec() const noexcept
    {
        return prec_;
    }
    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    bool known_zero() const noexcept
    {
        return terms_.empty();
    }
    LaurentSeries coeff(const XMonomial &mono) const;
    std::int64_t val_eff() const;

    Form truncated(std::int64_t prec) const;
    Form map_coeffs(const std::function<LaurentSeries(const XMonomial &, const LaurentSeries &)> &fn) const;
    Form scaled(const LaurentSeries &c) const;

    friend Form operator+(const Form &a, const Form &b);
    friend Form operator-(const Form &a, const Form &b);
    friend Form operator*(const Form &a, const Form &b);
    Form operator-() const;

    friend bool operator==(const Form &a, const Form &b) = default;
    // Coefficients agree below the common precision.
    friend bool agree(const Form &a, const Form &b);

    std::string str() const;

private:
    void add_term(const XMonomial &mono, const LaurentSeries &c);

    int n_;
    int d_;
    std::int64_t prec_;
    TermMap terms_;
};

// Quotient q with num = den * q, computed by lex division with precision
// tracking; inverses are capped at v^cap. Throws NotDivisible when a known
// nonzero remainder term survives and CoefficientNotInvertible when den has
// no known nonzero coefficient.
Form exact_divide_form(const Form &num, const Form &den, std::int64_t cap = 64);

// Degree-d parts in x of a series with r = 1, as forms in v = w^{1/p}.
// p must be a multiple of s.p(). Degrees above the truncation come back
// with no known terms.
std::vector<Form> x_forms(const PuiseuxSeries &s, int p, int max_degree);

// Inverse of x_forms in frame (p, q). The truncation is the largest N <= cap
// such that every internal degree <= N is determined. Throws PoleBound.
PuiseuxSeries from_x_forms(const std::vector<Form> &forms, int p, int q, int cap);

} // namespace fsplit

#endif
