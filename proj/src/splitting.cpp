#include <fsplit/errors.hpp>
#include <fsplit/newton.hpp>
#include <fsplit/splitting.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fsplit
{

namespace
{

Rational binomial(const Rational &beta, int t)
{
    Rational out(1);
    for (int s = 0; s < t; ++s) {
        out *= (beta - s) / Rational(s + 1);
    }
    return out;
}

Rational power(const Rational &base, const Integer &e)
{
    Rational out(1);
    Rational b = e < 0 ? Rational(1) / base : base;
    Integer n = abs(e);
    for (; n > 0; n -= 1) {
        out *= b;
    }
    return out;
}

// Terms (t, coefficient) of the expansion of w^beta at w = w0 + w', t <= limit.
std::vector<std::pair<int, Rational>> expand_power(const Rational &beta, const Rational &w0, int limit)
{
    std::vector<std::pair<int, Rational>> out;
    if (w0 == 0) {
        if (beta.get_den() != 1 || beta < 0) {
            fail(ErrorCode::NeedsExtension, "w^" + to_string(beta) + " at w = 0 leaves the integer frame");
        }
        if (beta <= limit) {
            out.emplace_back(static_cast<int>(beta.get_num().get_si()), Rational(1));
        }
        return out;
    }
    if (beta.get_den() != 1 && w0 != 1) {
        fail(ErrorCode::NeedsExtension, "w0^" + to_string(beta) + " is not in the tower");
    }
    for (int t = 0; t <= limit; ++t) {
        const Rational b = binomial(beta, t);
        if (b == 0) {
            break;
        }
        const Rational lead = beta.get_den() == 1 ? power(w0, beta.get_num() - t) : Rational(1);
        out.emplace_back(t, b * lead);
    }
    return out;
}

FieldElem eval_u(const FieldElem &c, const std::vector<Cyclotomic> &u0)
{
    return u0.empty() ? c : FieldElem(c.evaluate(u0));
}

LaurentSeries eval_form(const Form &f, const std::vector<Rational> &c)
{
    LaurentSeries out = LaurentSeries::zero(f.prec());
    for (const auto &[mono, a] : f.terms()) {
        Rational m(1);
        for (std::size_t j = 0; j < mono.size(); ++j) {
            for (int e = 0; e < mono[j]; ++e) {
                m *= c[j];
            }
        }
        out += a * LaurentSeries(FieldElem(m));
    }
    return out;
}

// d/dx_j of the form, evaluated at c.
LaurentSeries eval_partial(const Form &f, std::size_t j, const std::vector<Rational> &c)
{
    LaurentSeries out = LaurentSeries::zero(f.prec());
    for (const auto &[mono, a] : f.terms()) {
        if (mono[j] == 0) {
            continue;
        }
        Rational m(mono[j]);
        for (std::size_t l = 0; l < mono.size(); ++l) {
            for (int e = 0; e < mono[l] - (l == j ? 1 : 0); ++e) {
                m *= c[l];
            }
        }
        out += a * LaurentSeries(FieldElem(m));
    }
    return out;
}

// The (x, z) form in m + 1 variables, z first.
Form xz_polynomial(const std::vector<Form> &P)
{
    const int k = static_cast<int>(P.size()) - 1;
    const int m = P[0].nvars();
    std::int64_t prec = LaurentSeries::exact;
    Form::TermMap terms;
    for (int i = 0; i <= k; ++i) {
        prec = std::min(prec, P[static_cast<std::size_t>(i)].prec());
        for (const auto &[mono, c] : P[static_cast<std::size_t>(i)].terms()) {
            XMonomial full{k - i};
            full.insert(full.end(), mono.begin(), mono.end());
            terms.emplace(std::move(full), c);
        }
    }
    return Form::from_terms(m + 1, k, terms, prec);
}

Form z_plus(const Form &l)
{
    const int m = l.nvars();
    Form::TermMap terms;
    XMonomial z(static_cast<std::size_t>(m + 1), 0);
    z[0] = 1;
    terms.emplace(z, LaurentSeries(FieldElem(1L)));
    for (const auto &[mono, c] : l.terms()) {
        XMonomial full{0};
        full.insert(full.end(), mono.begin(), mono.end());
        terms.emplace(std::move(full), c);
    }
    return Form::from_terms(m + 1, 1, terms, l.prec());
}

// Deterministic directions (1, t, t^2, ...).
std::vector<std::vector<Rational>> directions(int m)
{
    std::vector<std::vector<Rational>> out;
    if (m <= 1) {
        out.push_back(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
        return out;
    }
    for (long t : {1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, -7L, 11L, -11L, 13L, -13L, 17L, -17L, 19L, -19L, 23L,
                   -23L, 29L, -29L, 31L, -31L}) {
        std::vector<Rational> c;
        Rational e(1);
        for (int j = 0; j < m; ++j) {
            c.push_back(e);
            e *= t;
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Candidate enumeration over basis directions: the roots of P(e_j, z) give
// the possible j-th coefficients; every combination is tried by division.
// Only for exact constant coefficients.
std::vector<Form> factor_by_basis(const std::vector<Form> &P, std::int64_t cap)
{
    const int k = static_cast<int>(P.size()) - 1;
    const int m = P[0].nvars();
    std::vector<std::vector<FieldElem>> cands(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(m), Rational(0));
        e[static_cast<std::size_t>(j)] = 1;
        std::vector<FieldElem> q(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            q[static_cast<std::size_t>(k - i)] = eval_form(P[static_cast<std::size_t>(i)], e).coeff(0);
        }
        for (const auto &y : tower_roots(q)) {
            const FieldElem lam = -y;
            if (std::find(cands[static_cast<std::size_t>(j)].begin(), cands[static_cast<std::size_t>(j)].end(), lam) ==
                cands[static_cast<std::size_t>(j)].end()) {
                cands[static_cast<std::size_t>(j)].push_back(lam);
            }
        }
        std::sort(cands[static_cast<std::size_t>(j)].begin(), cands[static_cast<std::size_t>(j)].end(),
                  [](const FieldElem &a, const FieldElem &b) { return canonical_less(a, b); });
    }
    Form rest = xz_polynomial(P);
    std::vector<Form> out;
    while (static_cast<int>(out.size()) < k) {
        bool peeled = false;
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        while (!peeled) {
            std::vector<LaurentSeries> lam;
            for (int j = 0; j < m; ++j) {
                lam.emplace_back(cands[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]);
            }
            const Form l = Form::linear(lam);
            try {
                rest = exact_divide_form(rest, z_plus(l), cap);
                out.push_back(l);
                peeled = true;
                break;
            } catch (const Error &e) {
                if (e.code() != ErrorCode::NotDivisible) {
                    throw;
                }
            }
            int j = m - 1;
            while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == cands[static_cast<std::size_t>(j)].size()) {
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) {
                break;
            }
        }
        if (!peeled) {
            fail(ErrorCode::NotAProductOfLinearForms, "no candidate linear factor divides the form");
        }
    }
    for (std::size_t a = 0; a < out.size(); ++a) {
        for (std::size_t b = a + 1; b < out.size(); ++b) {
            if (out[a] == out[b]) {
                fail(ErrorCode::NotReduced, "repeated factor z + " + out[a].str());
            }
        }
    }
    return out;
}

bool exact_constant(const std::vector<Form> &P)
{
    for (const auto &f : P) {
        if (f.prec() < LaurentSeries::exact) {
            return false;
        }
        for (const auto &[mono, c] : f.terms()) {
            if (!c.is_exact() || c.terms().size() != 1 || c.terms().begin()->first != 0 ||
                !c.terms().begin()->second.is_constant()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool Point::at_origin() const
{
    return std::all_of(w0.begin(), w0.end(), [](const Rational &q) { return q == 0; });
}

WeierstrassPoly translate_to_point(const WeierstrassPoly &f, const Point &at)
{
    if (!at.w0.empty() && static_cast<int>(at.w0.size()) != f.r()) {
        fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(at.w0.size()) + " w coordinates");
    }
    if (at.at_origin()) {
        if (at.u0.empty()) {
            return f;
        }
        return f.map_coeffs([&](int, const PuiseuxSeries &a) {
            return a.map_terms([&](const PuiseuxSeries::Exps &, const FieldElem &c) { return eval_u(c, at.u0); });
        });
    }
    return f.map_coeffs([&](int, const PuiseuxSeries &a) {
        const int r = a.r();
        const int n = a.trunc();
        PuiseuxSeries::TermMap acc;
        for (const auto &[e, c] : a.terms()) {
            const int na = e.alpha_total();
            // partial products over w_1..w_j
            std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, Rational(1)}};
            for (int j = 0; j < r; ++j) {
                std::vector<std::pair<std::vector<int>, Rational>> next;
                for (const auto &[ts, coef] : partial) {
                    const int used = na + std::accumulate(ts.begin(), ts.end(), 0);
                    for (const auto &[t, b] :
                         expand_power(e.beta[static_cast<std::size_t>(j)], at.w0[static_cast<std::size_t>(j)], n - used)) {
                        auto ts2 = ts;
                        ts2.push_back(t);
                        next.emplace_back(std::move(ts2), coef * b);
                    }
                }
                partial = std::move(next);
            }
            const FieldElem cu = eval_u(c, at.u0);
            for (const auto &[ts, coef] : partial) {
                PuiseuxSeries::Exps key = ts;
                key.insert(key.end(), e.alpha.begin(), e.alpha.end());
                FieldElem &slot = acc[key];
                slot += cu * FieldElem(coef);
            }
        }
        std::erase_if(acc, [](const auto &kv) { return kv.second.is_zero(); });
        return PuiseuxSeries::from_internal(r, a.num_x(), 1, 0, n, acc);
    });
}

std::vector<Form> LowestPart::xz_forms(int k, int m) const
{
    std::vector<Form::TermMap> parts(static_cast<std::size_t>(k + 1));
    for (const auto &t : terms) {
        parts[static_cast<std::size_t>(k - t.zdeg)].emplace(t.alpha, LaurentSeries(t.c));
    }
    std::vector<Form> out;
    for (int i = 0; i <= k; ++i) {
        out.push_back(Form::from_terms(m, i, parts[static_cast<std::size_t>(i)]));
    }
    return out;
}

std::string LowestPart::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms) {
        os << (first ? "" : " + ") << "(" << t.c.str() << ")";
        for (std::size_t j = 0; j < t.beta.size(); ++j) {
            if (t.beta[j] != 0) {
                os << "*w" << (t.beta.size() > 1 ? std::to_string(j + 1) : "") << "^" << to_string(t.beta[j]);
            }
        }
        for (std::size_t j = 0; j < t.alpha.size(); ++j) {
            if (t.alpha[j] != 0) {
                os << "*x" << j + 1 << "^" << t.alpha[j];
            }
        }
        if (t.zdeg != 0) {
            os << "*z^" << t.zdeg;
        }
        first = false;
    }
    return os.str();
}

LowestPart lowest_homogeneous_part(const WeierstrassPoly &f0, const Point &at)
{
    const WeierstrassPoly f = translate_to_point(f0, at);
    const int k = f.k();
    struct Cand {
        Rational degree;
        WXZTerm term;
    };
    std::vector<Cand> cands;
    cands.push_back({Rational(k), {std::vector<Rational>(static_cast<std::size_t>(f.r()), Rational(0)),
                                   std::vector<int>(static_cast<std::size_t>(f.num_x()), 0), k, FieldElem(1L)}});
    for (int i = 2; i <= k; ++i) {
        for (const auto &[e, c] : f.a(i).terms()) {
            cands.push_back({e.beta_total() + e.alpha_total() + (k - i), {e.beta, e.alpha, k - i, c}});
        }
    }
    Rational low = cands.front().degree;
    for (const auto &c : cands) {
        low = std::min(low, c.degree);
    }
    // Unknown terms of a_i have internal degree > N; with q = 0 their
    // (w, x, z)-degree is at least N/p + k - i.
    for (int i = 2; i <= k; ++i) {
        const auto &a = f.a(i);
        if (a.q() > 0) {
            fail(ErrorCode::TruncationInsufficient, "lowest part of a coefficient with x/w^q is not determined");
        }
        if (Rational(a.p()) * (low - k + i) >= Rational(a.trunc() + 1)) {
            fail(ErrorCode::TruncationInsufficient,
                 "truncation of a_" + std::to_string(i) + " too low to fix the lowest part");
        }
    }
    LowestPart out;
    out.degree = low;
    out.xz_pure = true;
    for (auto &c : cands) {
        if (c.degree == low) {
            for (const auto &b : c.term.beta) {
                if (b != 0) {
                    out.xz_pure = false;
                }
            }
            out.terms.push_back(std::move(c.term));
        }
    }
    return out;
}

namespace
{

bool seeds_distinct(const std::vector<Form> &seeds)
{
    for (std::size_t a = 0; a < seeds.size(); ++a) {
        for (std::size_t b = a + 1; b < seeds.size(); ++b) {
            if ((seeds[a] - seeds[b]).known_zero()) {
                return false;
            }
        }
    }
    return true;
}

// Seeds read off the roots along c and c + e_j, j >= 1, instead of the
// implicit derivative, which loses precision when roots nearly collide.
// rough[i] picks the candidate roots; division decides. Empty on failure.
std::vector<Form> refine_by_directions(const std::vector<Form> &P, const std::vector<Rational> &c,
                                       const std::vector<LaurentSeries> &z0, const std::vector<Form> &rough,
                                       std::int64_t cap)
{
    const int k = static_cast<int>(P.size()) - 1;
    const int m = P[0].nvars();
    std::vector<std::vector<LaurentSeries>> along(static_cast<std::size_t>(m));
    for (int j = 1; j < m; ++j) {
        auto d = c;
        d[static_cast<std::size_t>(j)] += 1;
        std::vector<LaurentSeries> q(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            q[static_cast<std::size_t>(k - i)] = eval_form(P[static_cast<std::size_t>(i)], d);
        }
        try {
            auto roots = laurent_roots(q, cap);
            if (!roots.complete || static_cast<int>(roots.roots.size()) != k) {
                return {};
            }
            along[static_cast<std::size_t>(j)] = std::move(roots.roots);
        } catch (const Error &) {
            return {};
        }
    }
    Form rest = xz_polynomial(P);
    std::vector<Form> out;
    for (std::size_t i = 0; i < rough.size(); ++i) {
        // candidates per direction: roots agreeing with the rough seed
        std::vector<std::vector<LaurentSeries>> cands(static_cast<std::size_t>(m));
        for (int j = 1; j < m; ++j) {
            auto d = c;
            d[static_cast<std::size_t>(j)] += 1;
            const LaurentSeries predicted = -eval_form(rough[i], d);
            for (const auto &z : along[static_cast<std::size_t>(j)]) {
                if ((z - predicted).known_zero()) {
                    cands[static_cast<std::size_t>(j)].push_back(z);
                }
            }
            if (cands[static_cast<std::size_t>(j)].empty()) {
                return {};
            }
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        bool peeled = false;
        while (!peeled) {
            std::vector<LaurentSeries> lam(static_cast<std::size_t>(m));
            LaurentSeries first = -z0[i];
            for (int j = 1; j < m; ++j) {
                lam[static_cast<std::size_t>(j)] = z0[i] - cands[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
                first -= LaurentSeries(FieldElem(c[static_cast<std::size_t>(j)])) * lam[static_cast<std::size_t>(j)];
            }
            lam[0] = first;
            const Form l = Form::linear(lam);
            try {
                rest = exact_divide_form(rest, z_plus(l), cap);
                out.push_back(l);
                peeled = true;
                break;
            } catch (const Error &e) {
                if (e.code() != ErrorCode::NotDivisible) {
                    return {};
                }
            }
            int j = m - 1;
            while (j >= 1 && ++idx[static_cast<std::size_t>(j)] == cands[static_cast<std::size_t>(j)].size()) {
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 1) {
                break;
            }
        }
        if (!peeled) {
            return {};
        }
    }
    return out;
}

} // namespace

std::vector<Form> factor_linear_forms(const std::vector<Form> &P, std::int64_t cap)
{
    if (P.size() < 2) {
        fail(ErrorCode::InvalidParams, "form of degree < 1 in z");
    }
    const int k = static_cast<int>(P.size()) - 1;
    const int m = P[0].nvars();
    if (!(P[0].coeff(XMonomial(static_cast<std::size_t>(m), 0)) == LaurentSeries(FieldElem(1L)))) {
        fail(ErrorCode::InvalidParams, "form is not monic in z");
    }
    const Form whole = xz_polynomial(P);
    bool truncation = false;
    std::optional<Error> extension;
    for (const auto &c : directions(m)) {
        std::vector<LaurentSeries> q(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            q[static_cast<std::size_t>(k - i)] = eval_form(P[static_cast<std::size_t>(i)], c);
        }
        LaurentRoots roots;
        try {
            roots = laurent_roots(q, cap);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::NeedsExtension && exact_constant(P) && m > 1) {
                return factor_by_basis(P, cap);
            }
            if (e.code() == ErrorCode::NeedsExtension) {
                // roots colliding along c may separate along another direction
                extension = e;
                continue;
            }
            if (e.code() == ErrorCode::NotReduced) {
                continue;
            }
            if (e.code() == ErrorCode::TruncationInsufficient) {
                truncation = true;
                continue;
            }
            throw;
        }
        if (!roots.complete || static_cast<int>(roots.roots.size()) < k) {
            fail(ErrorCode::NotDivisible, "linear factors need a ramified coefficient variable");
        }
        std::vector<Form> out;
        bool ok = true;
        for (const auto &z : roots.roots) {
            std::vector<LaurentSeries> pw{LaurentSeries(FieldElem(1L))};
            for (int e = 1; e <= k; ++e) {
                pw.push_back(pw.back() * z);
            }
            LaurentSeries pz;
            std::vector<LaurentSeries> px(static_cast<std::size_t>(m));
            for (int e = 0; e <= k; ++e) {
                const Form &pe = P[static_cast<std::size_t>(k - e)];
                if (e >= 1) {
                    pz += LaurentSeries(FieldElem(static_cast<long>(e))) * q[static_cast<std::size_t>(e)] *
                          pw[static_cast<std::size_t>(e - 1)];
                }
                for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
                    px[j] += eval_partial(pe, j, c) * pw[static_cast<std::size_t>(e)];
                }
            }
            if (pz.known_zero()) {
                ok = false;
                break;
            }
            const LaurentSeries inv = pz.inverse(cap);
            std::vector<LaurentSeries> lam;
            for (const auto &d : px) {
                lam.push_back(d * inv);
            }
            out.push_back(Form::linear(lam));
        }
        if (!ok) {
            truncation = true;
            continue;
        }
        if (!seeds_distinct(out)) {
            auto sharp = refine_by_directions(P, c, roots.roots, out, cap);
            if (!sharp.empty() && seeds_distinct(sharp)) {
                return sharp;
            }
        }
        Form rest = whole;
        for (const auto &l : out) {
            try {
                rest = exact_divide_form(rest, z_plus(l), cap);
            } catch (const Error &e) {
                if (e.code() == ErrorCode::NotDivisible) {
                    fail(ErrorCode::NotAProductOfLinearForms, "z + " + l.str() + " does not divide the form");
                }
                throw;
            }
        }
        return out;
    }
    if (truncation) {
        fail(ErrorCode::TruncationInsufficient, "linear factors not separated at this precision");
    }
    if (extension) {
        throw *extension;
    }
    fail(ErrorCode::NotReduced, "repeated linear factor");
}

} // namespace fsplit
