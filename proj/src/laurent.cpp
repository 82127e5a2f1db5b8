#include <fsplit/errors.hpp>
#include <fsplit/laurent.hpp>

#include <algorithm>

namespace fsplit
{

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    if (a >= LaurentSeries::exact || b >= LaurentSeries::exact) {
        return LaurentSeries::exact;
    }
    return std::min(a + b, LaurentSeries::exact);
}

LaurentSeries::LaurentSeries(const FieldElem &c, std::int64_t prec) : prec_(prec)
{
    if (!c.is_zero() && 0 < prec) {
        terms_.emplace(0, c);
    }
}

LaurentSeries LaurentSeries::monomial(const FieldElem &c, std::int64_t e, std::int64_t prec)
{
    LaurentSeries s;
    s.prec_ = prec;
    if (!c.is_zero() && e < prec) {
        s.terms_.emplace(e, c);
    }
    return s;
}

LaurentSeries LaurentSeries::from_terms(TermMap terms, std::int64_t prec)
{
    LaurentSeries s;
    s.prec_ = prec;
    for (auto &[e, c] : terms) {
        if (e < prec && !c.is_zero()) {
            s.terms_.emplace(e, std::move(c));
        }
    }
    return s;
}

std::optional<std::int64_t> LaurentSeries::valuation() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::int64_t LaurentSeries::val_eff() const
{
    return terms_.empty() ? prec_ : terms_.begin()->first;
}

FieldElem LaurentSeries::coeff(std::int64_t e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem() : it->second;
}

LaurentSeries LaurentSeries::truncated(std::int64_t prec) const
{
    if (prec >= prec_) {
        return *this;
    }
    LaurentSeries s;
    s.prec_ = prec;
    for (const auto &[e, c] : terms_) {
        if (e >= prec) {
            break;
        }
        s.terms_.emplace(e, c);
    }
    return s;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const
{
    LaurentSeries s;
    s.prec_ = is_exact() ? exact : prec_ + k;
    for (const auto &[e, c] : terms_) {
        s.terms_.emplace(e + k, c);
    }
    return s;
}

LaurentSeries LaurentSeries::map_coeffs(const std::function<FieldElem(std::int64_t, const FieldElem &)> &fn) const
{
    TermMap t;
    for (const auto &[e, c] : terms_) {
        t.emplace(e, fn(e, c));
    }
    return from_terms(std::move(t), prec_);
}

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b)
{
    LaurentSeries s;
    s.prec_ = std::min(a.prec_, b.prec_);
    for (const auto &[e, c] : a.terms_) {
        if (e < s.prec_) {
            s.terms_.emplace(e, c);
        }
    }
    for (const auto &[e, c] : b.terms_) {
        if (e >= s.prec_) {
            break;
        }
        auto it = s.terms_.find(e);
        if (it == s.terms_.end()) {
            s.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) {
                s.terms_.erase(it);
            }
        }
    }
    return s;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries s = *this;
    for (auto &[e, c] : s.terms_) {
        c = -c;
    }
    return s;
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b)
{
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    LaurentSeries s;
    s.prec_ = std::min(sat_add(a.val_eff(), b.prec_), sat_add(b.val_eff(), a.prec_));
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            const std::int64_t e = ea + eb;
            if (e >= s.prec_) {
                break;
            }
            auto it = s.terms_.find(e);
            if (it == s.terms_.end()) {
                s.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) {
                    s.terms_.erase(it);
                }
            }
        }
    }
    return s;
}

LaurentSeries LaurentSeries::inverse(std::int64_t cap) const
{
    if (terms_.empty()) {
        fail(ErrorCode::CoefficientNotInvertible, "series has no known nonzero term");
    }
    const std::int64_t v0 = terms_.begin()->first;
    if (is_exact() && terms_.size() == 1) {
        return monomial(terms_.begin()->second.inverse(), -v0);
    }
    // Relative precision of the unit part, then absolute precision of 1/a.
    const std::int64_t rel = is_exact() ? exact : prec_ - v0;
    std::int64_t out_prec = is_exact() ? cap : std::min(rel - v0, cap);
    const std::int64_t nterms = out_prec + v0; // relative terms of the inverse unit
    LaurentSeries s;
    s.prec_ = out_prec;
    if (nterms <= 0) {
        return s;
    }
    const FieldElem u0_inv = terms_.begin()->second.inverse();
    std::vector<FieldElem> g;
    g.reserve(static_cast<std::size_t>(nterms));
    g.push_back(u0_inv);
    for (std::int64_t n = 1; n < nterms; ++n) {
        FieldElem acc;
        for (const auto &[e, c] : terms_) {
            const std::int64_t i = e - v0;
            if (i == 0) {
                continue;
            }
            if (i > n) {
                break;
            }
            acc += c * g[static_cast<std::size_t>(n - i)];
        }
        g.push_back(-(acc * u0_inv));
    }
    for (std::int64_t n = 0; n < nterms; ++n) {
        if (!g[static_cast<std::size_t>(n)].is_zero()) {
            s.terms_.emplace(n - v0, g[static_cast<std::size_t>(n)]);
        }
    }
    return s;
}

bool agree(const LaurentSeries &a, const LaurentSeries &b)
{
    const std::int64_t p = std::min(a.prec_, b.prec_);
    return a.truncated(p).terms_ == b.truncated(p).terms_;
}

std::string LaurentSeries::str() const
{
    std::string out;
    for (const auto &[e, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.str() + ")*v^" + std::to_string(e);
    }
    if (out.empty()) {
        out = "0";
    }
    if (!is_exact()) {
        out += " + O(v^" + std::to_string(prec_) + ")";
    }
    return out;
}

} // namespace fsplit
