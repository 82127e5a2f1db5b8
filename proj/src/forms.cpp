#include <fsplit/errors.hpp>
#include <fsplit/forms.hpp>

#include <algorithm>
#include <numeric>

namespace fsplit
{

namespace
{

void monomials_rec(int n, int d, std::size_t var, XMonomial &cur, std::vector<XMonomial> &out)
{
    if (var + 1 == static_cast<std::size_t>(n)) {
        cur[var] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[var] = e;
        monomials_rec(n, d - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

bool divides(const XMonomial &a, const XMonomial &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

XMonomial mono_mul(const XMonomial &a, const XMonomial &b)
{
    XMonomial out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

XMonomial mono_div(const XMonomial &a, const XMonomial &b)
{
    XMonomial out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

} // namespace

std::vector<XMonomial> monomials_of_degree(int n, int d)
{
    std::vector<XMonomial> out;
    if (n == 0) {
        if (d == 0) {
            out.emplace_back();
        }
        return out;
    }
    XMonomial cur(static_cast<std::size_t>(n), 0);
    monomials_rec(n, d, 0, cur, out);
    return out;
}

Form::Form(int nvars, int degree, std::int64_t prec) : n_(nvars), d_(degree), prec_(prec)
{
    if (nvars < 0 || degree < 0) {
        fail(ErrorCode::InvalidParams, "bad form shape");
    }
}

void Form::add_term(const XMonomial &mono, const LaurentSeries &c)
{
    auto it = terms_.find(mono);
    LaurentSeries sum = (it == terms_.end() ? LaurentSeries::zero(prec_) : it->second) + c.truncated(prec_);
    if (it != terms_.end()) {
        terms_.erase(it);
    }
    if (!sum.known_zero()) {
        terms_.emplace(mono, sum.truncated(prec_));
    }
}

Form Form::from_terms(int nvars, int degree, const TermMap &terms, std::int64_t prec)
{
    for (const auto &[mono, c] : terms) {
        if (static_cast<int>(mono.size()) != nvars || std::accumulate(mono.begin(), mono.end(), 0) != degree) {
            fail(ErrorCode::DimensionMismatch, "monomial does not fit the form");
        }
        prec = std::min(prec, c.prec());
    }
    Form f(nvars, degree, prec);
    for (const auto &[mono, c] : terms) {
        f.add_term(mono, c);
    }
    return f;
}

Form Form::linear(const std::vector<LaurentSeries> &coeffs)
{
    TermMap t;
    const int n = static_cast<int>(coeffs.size());
    for (int j = 0; j < n; ++j) {
        XMonomial mono(static_cast<std::size_t>(n), 0);
        mono[static_cast<std::size_t>(j)] = 1;
        t.emplace(std::move(mono), coeffs[static_cast<std::size_t>(j)]);
    }
    return from_terms(n, 1, t);
}

LaurentSeries Form::coeff(const XMonomial &mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? LaurentSeries::zero(prec_) : it->second;
}

std::int64_t Form::val_eff() const
{
    std::int64_t v = prec_;
    for (const auto &[mono, c] : terms_) {
        v = std::min(v, c.val_eff());
    }
    return v;
}

Form Form::truncated(std::int64_t prec) const
{
    Form f(n_, d_, std::min(prec, prec_));
    for (const auto &[mono, c] : terms_) {
        f.add_term(mono, c);
    }
    return f;
}

Form Form::map_coeffs(const std::function<LaurentSeries(const XMonomial &, const LaurentSeries &)> &fn) const
{
    TermMap t;
    for (const auto &[mono, c] : terms_) {
        t.emplace(mono, fn(mono, c));
    }
    return from_terms(n_, d_, t, prec_);
}

Form Form::scaled(const LaurentSeries &c) const
{
    Form f(n_, d_, std::min(sat_add(prec_, c.val_eff()), sat_add(val_eff(), c.prec())));
    for (const auto &[mono, a] : terms_) {
        f.add_term(mono, a * c);
    }
    return f;
}

Form operator+(const Form &a, const Form &b)
{
    if (a.n_ != b.n_ || (a.d_ != b.d_ && !a.known_zero() && !b.known_zero())) {
        fail(ErrorCode::DimensionMismatch, "adding forms of different shapes");
    }
    Form f(a.n_, a.known_zero() ? b.d_ : a.d_, std::min(a.prec_, b.prec_));
    for (const auto &[mono, c] : a.terms_) {
        f.add_term(mono, c);
    }
    for (const auto &[mono, c] : b.terms_) {
        f.add_term(mono, c);
    }
    return f;
}

Form Form::operator-() const
{
    Form f = *this;
    for (auto &[mono, c] : f.terms_) {
        c = -c;
    }
    return f;
}

Form operator-(const Form &a, const Form &b)
{
    return a + (-b);
}

Form operator*(const Form &a, const Form &b)
{
    if (a.n_ != b.n_) {
        fail(ErrorCode::DimensionMismatch, "multiplying forms in different variables");
    }
    Form f(a.n_, a.d_ + b.d_, std::min(sat_add(a.prec_, b.val_eff()), sat_add(b.prec_, a.val_eff())));
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            f.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return f;
}

bool agree(const Form &a, const Form &b)
{
    const std::int64_t p = std::min(a.prec_, b.prec_);
    return a.truncated(p).terms_ == b.truncated(p).terms_;
}

std::string Form::str() const
{
    std::string out;
    for (const auto &[mono, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "[" + c.truncated(LaurentSeries::exact).str() + "]";
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] != 0) {
                out += "*y" + std::to_string(i) + "^" + std::to_string(mono[i]);
            }
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (prec_ < LaurentSeries::exact) {
        out += " + O(v^" + std::to_string(prec_) + ")";
    }
    return out;
}

Form exact_divide_form(const Form &num, const Form &den, std::int64_t cap)
{
    if (num.nvars() != den.nvars()) {
        fail(ErrorCode::DimensionMismatch, "dividing forms in different variables");
    }
    if (den.known_zero()) {
        fail(ErrorCode::CoefficientNotInvertible, "divisor has no known nonzero coefficient");
    }
    const int n = num.nvars();
    const int qdeg = num.degree() - den.degree();
    if (qdeg < 0) {
        if (num.known_zero()) {
            return Form(n, 0, num.prec());
        }
        fail(ErrorCode::NotDivisible, "divisor degree exceeds dividend degree");
    }
    const XMonomial lead = den.terms().begin()->first;
    const LaurentSeries lc = den.terms().begin()->second;
    const LaurentSeries lc_inv = lc.inverse(cap);
    const auto den_monos = monomials_of_degree(n, den.degree());

    std::map<XMonomial, LaurentSeries, LexGreater> rem;
    for (const auto &mono : monomials_of_degree(n, num.degree())) {
        rem.emplace(mono, num.coeff(mono));
    }
    Form::TermMap quot;
    std::int64_t qprec = LaurentSeries::exact;
    std::map<XMonomial, bool, LexGreater> done;
    // Loss of precision in already processed remainder entries.
    std::int64_t late_loss = LaurentSeries::exact;

    while (!rem.empty()) {
        auto it = rem.begin();
        const XMonomial mono = it->first;
        const LaurentSeries c = it->second;
        rem.erase(it);
        done[mono] = true;
        if (!divides(lead, mono)) {
            if (!c.known_zero()) {
                fail(ErrorCode::NotDivisible, "remainder term " + c.str() + " is not divisible");
            }
            continue;
        }
        const XMonomial qm = mono_div(mono, lead);
        const LaurentSeries qc = c * lc_inv;
        qprec = std::min(qprec, qc.prec());
        quot.emplace(qm, qc);
        for (const auto &dm : den_monos) {
            if (dm == lead) {
                continue;
            }
            const XMonomial target = mono_mul(qm, dm);
            const LaurentSeries contrib = qc * den.coeff(dm);
            auto rt = rem.find(target);
            if (rt != rem.end()) {
                rt->second -= contrib;
            } else if (done.count(target) != 0) {
                // Only uncertainty can land here; it bounds the quotient.
                if (!contrib.known_zero()) {
                    fail(ErrorCode::NotDivisible, "divisor lead is not lex-leading");
                }
                late_loss = std::min(late_loss, sat_add(contrib.prec(), -lc.val_eff()));
            }
        }
    }
    return Form::from_terms(n, qdeg, quot, std::min(qprec, late_loss));
}

std::vector<Form> x_forms(const PuiseuxSeries &s, int p, int max_degree)
{
    if (s.r() != 1) {
        fail(ErrorCode::MultipleWVariables, "x-forms need a single w variable");
    }
    if (p % s.p() != 0) {
        fail(ErrorCode::InvalidParams, "ramification " + std::to_string(p) + " not a multiple of " +
                                           std::to_string(s.p()));
    }
    const std::int64_t t = p / s.p();
    const std::int64_t pq = std::int64_t(s.p()) * s.q();
    const int m = s.num_x();
    std::vector<Form::TermMap> parts(static_cast<std::size_t>(max_degree + 1));
    for (const auto &[e, c] : s.internal_terms()) {
        const int d = std::accumulate(e.begin() + 1, e.end(), 0);
        if (d > max_degree) {
            continue;
        }
        XMonomial mono(e.begin() + 1, e.end());
        const auto term = LaurentSeries::monomial(c, t * (e[0] - pq * d));
        auto [it, fresh] = parts[static_cast<std::size_t>(d)].emplace(mono, term);
        if (!fresh) {
            it->second += term;
        }
    }
    std::vector<Form> out;
    for (int d = 0; d <= max_degree; ++d) {
        const std::int64_t prec = t * (std::int64_t(s.trunc()) - d + 1 - pq * d);
        out.push_back(Form::from_terms(m, d, parts[static_cast<std::size_t>(d)], prec));
    }
    return out;
}

PuiseuxSeries from_x_forms(const std::vector<Form> &forms, int p, int q, int cap)
{
    if (forms.empty()) {
        fail(ErrorCode::InvalidParams, "no forms");
    }
    const int m = forms.front().nvars();
    const std::int64_t pq = std::int64_t(p) * q;
    std::int64_t n = std::min<std::int64_t>(cap, static_cast<std::int64_t>(forms.size()) - 1);
    for (std::size_t d = 0; d < forms.size(); ++d) {
        const std::int64_t known = std::max<std::int64_t>(sat_add(forms[d].prec(), pq * std::int64_t(d)), 0);
        n = std::min(n, sat_add(known, std::int64_t(d) - 1));
    }
    if (n < 0) {
        fail(ErrorCode::TruncationInsufficient, "forms determine no internal degree");
    }
    PuiseuxSeries::TermMap terms;
    for (std::size_t d = 0; d < forms.size(); ++d) {
        for (const auto &[mono, c] : forms[d].terms()) {
            for (const auto &[e, a] : c.terms()) {
                const std::int64_t internal = e + pq * std::int64_t(d);
                if (internal < 0) {
                    fail(ErrorCode::PoleBound, "v^" + std::to_string(e) + " in x-degree " + std::to_string(d) +
                                                   " exceeds the pole bound for q = " + std::to_string(q));
                }
                if (internal + std::int64_t(d) > n) {
                    continue;
                }
                PuiseuxSeries::Exps ex;
                ex.push_back(static_cast<int>(internal));
                ex.insert(ex.end(), mono.begin(), mono.end());
                terms.emplace(std::move(ex), a);
            }
        }
    }
    return PuiseuxSeries::from_internal(1, m, p, q, static_cast<int>(n), terms);
}

} // namespace fsplit
