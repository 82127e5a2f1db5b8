#include <fsplit/errors.hpp>
#include <fsplit/field.hpp>

#include <algorithm>

namespace fsplit
{

namespace
{

int total_degree(const UMonomial &m)
{
    int d = 0;
    for (int e : m) {
        d += e;
    }
    return d;
}

void trim(UMonomial &m)
{
    while (!m.empty() && m.back() == 0) {
        m.pop_back();
    }
}

int exponent(const UMonomial &m, std::size_t i)
{
    return i < m.size() ? m[i] : 0;
}

UMonomial mono_mul(const UMonomial &a, const UMonomial &b)
{
    UMonomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = exponent(a, i) + exponent(b, i);
    }
    trim(r);
    return r;
}

bool mono_divides(const UMonomial &a, const UMonomial &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > exponent(b, i)) {
            return false;
        }
    }
    return true;
}

UMonomial mono_div(const UMonomial &b, const UMonomial &a)
{
    UMonomial r(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = b[i] - exponent(a, i);
    }
    trim(r);
    return r;
}

// Polynomial viewed as univariate in one parameter.
using Univariate = std::map<int, UPolynomial>;

Univariate split_var(const UPolynomial &p, std::size_t var)
{
    Univariate out;
    for (const auto &[m, c] : p.terms()) {
        UMonomial rest = m;
        int e = 0;
        if (var < rest.size()) {
            e = rest[var];
            rest[var] = 0;
            trim(rest);
        }
        out[e] = out[e] + UPolynomial::from_terms({{rest, c}});
    }
    return out;
}

UPolynomial join_var(const Univariate &u, std::size_t var)
{
    UPolynomial out;
    for (const auto &[e, coeff] : u) {
        out = out + coeff * UPolynomial::variable(var, e);
    }
    return out;
}

UPolynomial make_monic(const UPolynomial &p)
{
    if (p.is_zero()) {
        return p;
    }
    return p.scaled(p.leading_coefficient().inverse());
}

UPolynomial content_in(const UPolynomial &p, std::size_t var)
{
    UPolynomial g;
    for (const auto &[e, c] : split_var(p, var)) {
        g = UPolynomial::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) {
            break;
        }
    }
    return g;
}

// Pseudo-remainder of a by b with respect to var.
UPolynomial prem(const UPolynomial &a, const UPolynomial &b, std::size_t var)
{
    Univariate r = split_var(a, var);
    const Univariate bb = split_var(b, var);
    const int db = bb.rbegin()->first;
    const UPolynomial lb = bb.rbegin()->second;
    while (!r.empty() && r.rbegin()->first >= db) {
        const int dr = r.rbegin()->first;
        const UPolynomial lr = r.rbegin()->second;
        Univariate next;
        for (const auto &[e, c] : r) {
            next[e] = c * lb;
        }
        for (const auto &[e, c] : bb) {
            next[e + dr - db] = next[e + dr - db] - lr * c;
        }
        r.clear();
        for (auto &[e, c] : next) {
            if (!c.is_zero()) {
                r.emplace(e, std::move(c));
            }
        }
    }
    return join_var(r, var);
}

} // namespace

bool GrlexLess::operator()(const UMonomial &a, const UMonomial &b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int ea = exponent(a, i);
        const int eb = exponent(b, i);
        if (ea != eb) {
            return ea < eb;
        }
    }
    return false;
}

UPolynomial::UPolynomial(const Cyclotomic &c)
{
    if (!c.is_zero()) {
        terms_.emplace(UMonomial{}, c);
    }
}

UPolynomial UPolynomial::variable(std::size_t index, int power)
{
    UMonomial m(index + 1, 0);
    m[index] = power;
    trim(m);
    UPolynomial p;
    p.terms_.emplace(std::move(m), Cyclotomic(1));
    return p;
}

UPolynomial UPolynomial::from_terms(const std::vector<std::pair<UMonomial, Cyclotomic>> &terms)
{
    UPolynomial p;
    for (const auto &[m, c] : terms) {
        UMonomial t = m;
        trim(t);
        p.add_term(t, c);
    }
    return p;
}

void UPolynomial::add_term(const UMonomial &m, const Cyclotomic &c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

Cyclotomic UPolynomial::constant_value() const
{
    if (terms_.empty()) {
        return Cyclotomic();
    }
    auto it = terms_.find(UMonomial{});
    return it == terms_.end() ? Cyclotomic() : it->second;
}

const UMonomial &UPolynomial::leading_monomial() const
{
    if (terms_.empty()) {
        fail(ErrorCode::ZeroSeries, "leading monomial of zero polynomial");
    }
    return terms_.rbegin()->first;
}

const Cyclotomic &UPolynomial::leading_coefficient() const
{
    if (terms_.empty()) {
        fail(ErrorCode::ZeroSeries, "leading coefficient of zero polynomial");
    }
    return terms_.rbegin()->second;
}

std::size_t UPolynomial::num_vars() const
{
    std::size_t n = 0;
    for (const auto &[m, c] : terms_) {
        n = std::max(n, m.size());
    }
    return n;
}

int UPolynomial::degree_in(std::size_t var) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, exponent(m, var));
    }
    return d;
}

UPolynomial operator+(const UPolynomial &a, const UPolynomial &b)
{
    UPolynomial r = a;
    for (const auto &[m, c] : b.terms_) {
        r.add_term(m, c);
    }
    return r;
}

UPolynomial UPolynomial::operator-() const
{
    UPolynomial r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

UPolynomial operator-(const UPolynomial &a, const UPolynomial &b)
{
    return a + (-b);
}

UPolynomial operator*(const UPolynomial &a, const UPolynomial &b)
{
    UPolynomial r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

UPolynomial UPolynomial::scaled(const Cyclotomic &c) const
{
    if (c.is_zero()) {
        return {};
    }
    UPolynomial r = *this;
    for (auto &[m, v] : r.terms_) {
        v *= c;
    }
    return r;
}

UPolynomial UPolynomial::exact_div(const UPolynomial &a, const UPolynomial &b)
{
    if (b.is_zero()) {
        fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    if (b.is_constant()) {
        return a.scaled(b.constant_value().inverse());
    }
    UPolynomial r = a;
    UPolynomial q;
    const UMonomial &lb = b.leading_monomial();
    const Cyclotomic lb_inv = b.leading_coefficient().inverse();
    while (!r.is_zero()) {
        const UMonomial lr = r.leading_monomial();
        if (!mono_divides(lb, lr)) {
            fail(ErrorCode::NotDivisible, "polynomial " + b.str() + " does not divide " + a.str());
        }
        UPolynomial t;
        t.terms_.emplace(mono_div(lr, lb), r.leading_coefficient() * lb_inv);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

UPolynomial UPolynomial::gcd(const UPolynomial &a, const UPolynomial &b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.is_constant() || b.is_constant()) {
        return UPolynomial(Cyclotomic(1));
    }
    // Main variable: the first parameter occurring in either argument.
    std::size_t var = 0;
    const std::size_t n = std::max(a.num_vars(), b.num_vars());
    while (var < n && a.degree_in(var) == 0 && b.degree_in(var) == 0) {
        ++var;
    }
    if (a.degree_in(var) == 0) {
        return gcd(a, content_in(b, var));
    }
    if (b.degree_in(var) == 0) {
        return gcd(content_in(a, var), b);
    }
    const UPolynomial ca = content_in(a, var);
    const UPolynomial cb = content_in(b, var);
    UPolynomial pa = exact_div(a, ca);
    UPolynomial pb = exact_div(b, cb);
    const UPolynomial c = gcd(ca, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) {
        std::swap(pa, pb);
    }
    while (!pb.is_zero()) {
        UPolynomial r = prem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = UPolynomial();
        } else if (r.degree_in(var) == 0) {
            pb = UPolynomial(Cyclotomic(1));
        } else {
            pb = exact_div(r, content_in(r, var));
        }
    }
    return make_monic(c * pa);
}

Cyclotomic UPolynomial::evaluate(const std::vector<Cyclotomic> &point) const
{
    Cyclotomic total;
    for (const auto &[m, c] : terms_) {
        Cyclotomic t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (i >= point.size()) {
                fail(ErrorCode::DimensionMismatch, "evaluation point has too few parameters");
            }
            for (int e = 0; e < m[i]; ++e) {
                t *= point[i];
            }
        }
        total += t;
    }
    return total;
}

std::string UPolynomial::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + it->second.str() + ")";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] != 0) {
                out += "*u" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
            }
        }
    }
    return out;
}

FieldElem::FieldElem(const UPolynomial &num, const UPolynomial &den) : num_(num), den_(den)
{
    if (den_.is_zero()) {
        fail(ErrorCode::DivisionByZero, "zero denominator");
    }
    reduce();
}

void FieldElem::reduce()
{
    if (num_.is_zero()) {
        den_ = UPolynomial(Cyclotomic(1));
        return;
    }
    if (den_.is_constant()) {
        const Cyclotomic d = den_.constant_value();
        if (!d.is_one()) {
            num_ = num_.scaled(d.inverse());
            den_ = UPolynomial(Cyclotomic(1));
        }
        return;
    }
    const UPolynomial g = UPolynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = UPolynomial::exact_div(num_, g);
        den_ = UPolynomial::exact_div(den_, g);
    }
    const Cyclotomic lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Cyclotomic inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool FieldElem::is_one() const
{
    return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one();
}

Cyclotomic FieldElem::constant_value() const
{
    if (!is_constant()) {
        fail(ErrorCode::InvalidParams, "field element depends on parameters: " + str());
    }
    return num_.constant_value();
}

FieldElem FieldElem::inverse() const
{
    if (is_zero()) {
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    }
    if (is_constant()) {
        return FieldElem(num_.constant_value().inverse());
    }
    return FieldElem(den_, num_);
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem operator+(const FieldElem &a, const FieldElem &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.is_constant() && b.is_constant()) {
        return FieldElem(a.num_.constant_value() + b.num_.constant_value());
    }
    if (a.den_ == b.den_) {
        return FieldElem(a.num_ + b.num_, a.den_);
    }
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem &a, const FieldElem &b)
{
    return a + (-b);
}

FieldElem operator*(const FieldElem &a, const FieldElem &b)
{
    if (a.is_zero() || b.is_zero()) {
        return FieldElem();
    }
    if (a.is_constant() && b.is_constant()) {
        return FieldElem(a.num_.constant_value() * b.num_.constant_value());
    }
    return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem operator/(const FieldElem &a, const FieldElem &b)
{
    if (b.is_zero()) {
        fail(ErrorCode::DivisionByZero, "division by zero field element");
    }
    if (a.is_constant() && b.is_constant()) {
        return FieldElem(a.num_.constant_value() / b.num_.constant_value());
    }
    return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
}

Cyclotomic FieldElem::evaluate(const std::vector<Cyclotomic> &point) const
{
    const Cyclotomic d = den_.evaluate(point);
    if (d.is_zero()) {
        fail(ErrorCode::DivisionByZero, "denominator vanishes at evaluation point");
    }
    return num_.evaluate(point) / d;
}

std::string FieldElem::str() const
{
    if (den_.is_constant()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool canonical_less(const FieldElem &a, const FieldElem &b)
{
    auto poly_less = [](const UPolynomial &x, const UPolynomial &y) {
        auto ix = x.terms().rbegin();
        auto iy = y.terms().rbegin();
        for (; ix != x.terms().rend() && iy != y.terms().rend(); ++ix, ++iy) {
            if (ix->first != iy->first) {
                return GrlexLess{}(ix->first, iy->first);
            }
            if (ix->second != iy->second) {
                return canonical_less(ix->second, iy->second);
            }
        }
        return x.terms().size() < y.terms().size();
    };
    if (!(a.num() == b.num())) {
        return poly_less(a.num(), b.num());
    }
    if (!(a.den() == b.den())) {
        return poly_less(a.den(), b.den());
    }
    return false;
}

FieldElem field_arith(const FieldElem &a, const FieldElem &b, FieldOp op)
{
    switch (op) {
        case FieldOp::add:
            return a + b;
        case FieldOp::sub:
            return a - b;
        case FieldOp::mul:
            return a * b;
        case FieldOp::div:
            return a / b;
    }
    return {};
}

} // namespace fsplit
