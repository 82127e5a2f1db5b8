#include <fsplit/errors.hpp>
#include <fsplit/splitting.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace fsplit
{

namespace
{

using XPoly = std::vector<Form>;

XPoly zero_poly(int m, int top)
{
    XPoly out;
    for (int d = 0; d <= top; ++d) {
        out.emplace_back(m, d);
    }
    return out;
}

XPoly mul(const XPoly &a, const XPoly &b, int m, int top)
{
    XPoly out = zero_poly(m, top);
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].known_zero() && a[s].prec() >= LaurentSeries::exact) {
            continue;
        }
        for (std::size_t t = 0; t < b.size() && s + t <= static_cast<std::size_t>(top); ++t) {
            out[s + t] = out[s + t] + a[s] * b[t];
        }
    }
    return out;
}

XPoly add(const XPoly &a, const XPoly &b)
{
    XPoly out = a;
    for (std::size_t d = 0; d < out.size() && d < b.size(); ++d) {
        out[d] = out[d] + b[d];
    }
    return out;
}

std::int64_t inverse_cap(int p, int n)
{
    return 4 * std::int64_t(p) * (n + 2) + 8;
}

int coefficient_p(const WeierstrassPoly &f)
{
    int p = 1;
    for (const auto &a : f.coeffs()) {
        p = std::lcm(p, a.p());
    }
    return p;
}

struct Attempt {
    bool ok = false;
    SplitStatus status = SplitStatus::NonSplitEvidence;
    std::string why;
    std::vector<XPoly> root_forms;
};

Attempt attempt_roots(const WeierstrassPoly &f, int p, int n, int *failed_degree)
{
    Attempt at;
    const int k = f.k();
    try {
        const auto fa = coefficient_forms(f, p, n + k - 1);
        std::vector<Form> lowest;
        for (int i = 0; i <= k; ++i) {
            lowest.push_back(fa[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
        }
        const auto seeds = factor_linear_forms(lowest, inverse_cap(p, n));
        at.root_forms = lift_root_forms(fa, seeds, n, inverse_cap(p, n), failed_degree);
        at.ok = true;
    } catch (const Error &e) {
        at.why = e.what();
        switch (e.code()) {
        case ErrorCode::NeedsExtension:
            at.status = SplitStatus::NeedsExtension;
            break;
        case ErrorCode::TruncationInsufficient:
        case ErrorCode::CoefficientNotInvertible:
            at.status = SplitStatus::TruncationInsufficient;
            break;
        case ErrorCode::NotDivisible:
        case ErrorCode::NotAProductOfLinearForms:
        case ErrorCode::NotReduced:
        case ErrorCode::SeedsNotDistinct:
            at.status = SplitStatus::NonSplitEvidence;
            break;
        default:
            throw;
        }
    }
    return at;
}

} // namespace

std::vector<std::vector<Form>> coefficient_forms(const WeierstrassPoly &f, int p, int max_degree)
{
    const int k = f.k();
    const int m = f.num_x();
    std::vector<std::vector<Form>> fa;
    XPoly one = zero_poly(m, max_degree);
    one[0] = Form::from_terms(m, 0, {{XMonomial(static_cast<std::size_t>(m), 0), LaurentSeries(FieldElem(1L))}});
    fa.push_back(one);
    fa.push_back(zero_poly(m, max_degree));
    for (int i = 2; i <= k; ++i) {
        XPoly row = x_forms(f.a(i), p, max_degree);
        for (int d = 0; d < i && d <= max_degree; ++d) {
            row[static_cast<std::size_t>(d)] = Form(m, d);
        }
        fa.push_back(std::move(row));
    }
    return fa;
}

std::vector<std::vector<Form>> lift_root_forms(const std::vector<std::vector<Form>> &fa,
                                               const std::vector<Form> &seeds, int max_degree,
                                               std::int64_t cap, int *failed_degree)
{
    const int k = static_cast<int>(fa.size()) - 1;
    if (static_cast<int>(seeds.size()) != k) {
        fail(ErrorCode::DimensionMismatch, "need " + std::to_string(k) + " seeds");
    }
    const int m = seeds.front().nvars();
    const int top = max_degree + k - 1;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = i + 1; j < seeds.size(); ++j) {
            if ((seeds[i] - seeds[j]).known_zero()) {
                fail(ErrorCode::SeedsNotDistinct, "seeds " + std::to_string(i + 1) + " and " +
                                                      std::to_string(j + 1) + " coincide");
            }
        }
    }
    std::vector<XPoly> out;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        Form sep = Form::from_terms(m, 0, {{XMonomial(static_cast<std::size_t>(m), 0), LaurentSeries(FieldElem(1L))}});
        for (std::size_t l = 0; l < seeds.size(); ++l) {
            if (l != i) {
                sep = sep * (seeds[l] - seeds[i]);
            }
        }
        XPoly b = zero_poly(m, max_degree);
        if (max_degree >= 1) {
            b[1] = seeds[i];
        }
        for (int d = 2; d <= max_degree; ++d) {
            XPoly neg = zero_poly(m, top);
            for (int e = 1; e < d; ++e) {
                neg[static_cast<std::size_t>(e)] = -b[static_cast<std::size_t>(e)];
            }
            XPoly value = fa[0];
            value.resize(static_cast<std::size_t>(top + 1), Form(m, 0));
            for (int t = 1; t <= k; ++t) {
                XPoly row = fa[static_cast<std::size_t>(t)];
                row.resize(static_cast<std::size_t>(top + 1), Form(m, 0));
                value = add(mul(value, neg, m, top), row);
            }
            for (int e = 0; e < d + k - 1; ++e) {
                if (!value[static_cast<std::size_t>(e)].known_zero()) {
                    if (failed_degree) {
                        *failed_degree = d - 1;
                    }
                    fail(ErrorCode::NotDivisible, "root " + std::to_string(i + 1) + " inconsistent in x-degree " +
                                                      std::to_string(e - k + 1));
                }
            }
            try {
                b[static_cast<std::size_t>(d)] =
                    exact_divide_form(value[static_cast<std::size_t>(d + k - 1)], sep, cap);
            } catch (const Error &e) {
                if (e.code() == ErrorCode::NotDivisible && failed_degree) {
                    *failed_degree = d;
                }
                if (e.code() == ErrorCode::NotDivisible) {
                    fail(ErrorCode::NotDivisible,
                         "root " + std::to_string(i + 1) + " does not lift in x-degree " + std::to_string(d));
                }
                throw;
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

RootSystem lift_roots(const WeierstrassPoly &f, const std::vector<Form> &seeds, int p, int q, int n)
{
    const auto fa = coefficient_forms(f, p, n + f.k() - 1);
    const auto forms = lift_root_forms(fa, seeds, n, inverse_cap(p, n));
    std::vector<PuiseuxSeries> roots;
    for (const auto &b : forms) {
        roots.push_back(from_x_forms(b, p, q, n));
    }
    sort_roots(roots);
    return make_root_system(std::move(roots));
}

std::string to_string(SplitStatus s)
{
    switch (s) {
    case SplitStatus::Split:
        return "Split";
    case SplitStatus::NonSplitEvidence:
        return "NonSplitEvidence";
    case SplitStatus::NeedsExtension:
        return "NeedsExtension";
    case SplitStatus::TruncationInsufficient:
        return "TruncationInsufficient";
    }
    return "?";
}

bool product_matches(const WeierstrassPoly &f, const std::vector<PuiseuxSeries> &roots)
{
    if (static_cast<int>(roots.size()) != f.k()) {
        return false;
    }
    const PuiseuxSeries s1 = elementary_symmetric(1, roots);
    if (!equal_mod_trunc(s1, PuiseuxSeries(s1.r(), s1.num_x(), s1.p(), s1.q(), s1.trunc()))) {
        return false;
    }
    for (int j = 2; j <= f.k(); ++j) {
        if (!equal_mod_trunc(elementary_symmetric(j, roots), f.a(j))) {
            return false;
        }
    }
    return true;
}

SplitResult split(const WeierstrassPoly &f, int p_max, int q_max, int n)
{
    if (f.r() != 1) {
        fail(ErrorCode::MultipleWVariables, "split searches a single w variable");
    }
    if (p_max < 1 || q_max < 0) {
        fail(ErrorCode::InvalidParams, "p_max >= 1 and q_max >= 0 required");
    }
    const auto flags = assert_form(f);
    if (!flags.in_ideal || !flags.order_k) {
        fail(ErrorCode::NotOrderK, "split needs a_k in (x) and ord_x a_j >= j");
    }
    if (n <= 0) {
        n = f.trunc();
    }
    const int base_p = coefficient_p(f);
    std::map<int, Attempt> cache;
    auto attempt_for = [&](int p) -> const Attempt & {
        auto it = cache.find(p);
        if (it != cache.end()) {
            return it->second;
        }
        Attempt at;
        if (p % base_p != 0) {
            at.why = "p is not a multiple of the coefficient ramification " + std::to_string(base_p);
        } else {
            int failed = -1;
            at = attempt_roots(f, p, n, &failed);
            if (!at.ok && failed == n) {
                int failed2 = -1;
                Attempt again = attempt_roots(f, p, n + 2, &failed2);
                if (again.ok) {
                    at = std::move(again);
                } else if (failed2 == n + 2 || failed2 == n + 1) {
                    at.status = SplitStatus::TruncationInsufficient;
                    at.why = "lift fails only near the truncation order: " + again.why;
                } else {
                    at = std::move(again);
                }
            }
        }
        return cache.emplace(p, std::move(at)).first->second;
    };

    SplitResult result;
    bool needs_extension = false;
    bool truncation = false;
    for (int q = 0; q <= q_max; ++q) {
        for (int p = 1; p <= p_max; ++p) {
            const std::string tag = "q=" + std::to_string(q) + " p=" + std::to_string(p) + ": ";
            const Attempt &at = attempt_for(p);
            if (!at.ok) {
                result.diagnostics.push_back(tag + to_string(at.status) + ": " + at.why);
                needs_extension = needs_extension || at.status == SplitStatus::NeedsExtension;
                truncation = truncation || at.status == SplitStatus::TruncationInsufficient;
                continue;
            }
            std::vector<PuiseuxSeries> roots;
            try {
                for (const auto &b : at.root_forms) {
                    roots.push_back(from_x_forms(b, p, q, n));
                }
            } catch (const Error &e) {
                if (e.code() == ErrorCode::PoleBound) {
                    result.diagnostics.push_back(tag + "NonSplitEvidence: " + e.what());
                    continue;
                }
                if (e.code() == ErrorCode::TruncationInsufficient) {
                    truncation = true;
                    result.diagnostics.push_back(tag + "TruncationInsufficient: " + e.what());
                    continue;
                }
                throw;
            }
            if (!product_matches(f, roots)) {
                result.diagnostics.push_back(tag + "NonSplitEvidence: product of the lifted factors differs from f");
                continue;
            }
            sort_roots(roots);
            result.status = SplitStatus::Split;
            result.p = p;
            result.q = q;
            result.root_system = make_root_system(std::move(roots));
            result.diagnostics.push_back(tag + "Split");
            return result;
        }
    }
    if (needs_extension) {
        result.status = SplitStatus::NeedsExtension;
    } else if (truncation) {
        result.status = SplitStatus::TruncationInsufficient;
    } else {
        result.status = SplitStatus::NonSplitEvidence;
    }
    return result;
}

PuiseuxSeries act_zeta(const PuiseuxSeries &b, int power)
{
    if (b.r() != 1) {
        fail(ErrorCode::MultipleWVariables, "mu_p acts on a single w variable");
    }
    const int p = b.p();
    if (p == 1) {
        return b;
    }
    const long pq = static_cast<long>(p) * b.q();
    return b.map_terms([&](const PuiseuxSeries::Exps &e, const FieldElem &c) {
        long cx = 0;
        for (std::size_t i = 1; i < e.size(); ++i) {
            cx += e[i];
        }
        const long beta_num = e[0] - pq * cx;
        return c * FieldElem(Cyclotomic::zeta(p, power * beta_num));
    });
}

std::vector<int> mu_p_action(const RootSystem &rs)
{
    const int k = static_cast<int>(rs.roots.size());
    std::vector<int> perm(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
        const PuiseuxSeries img = act_zeta(rs.roots[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j) {
            if (!used[static_cast<std::size_t>(j)] && equal_mod_trunc(img, rs.roots[static_cast<std::size_t>(j)])) {
                perm[static_cast<std::size_t>(i)] = j;
                used[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(i)] < 0) {
            fail(ErrorCode::NotClosedUnderAction, "image of root " + std::to_string(i + 1) + " is not a root");
        }
    }
    return perm;
}

namespace
{

FieldElem determinant(std::vector<std::vector<FieldElem>> a)
{
    const std::size_t n = a.size();
    FieldElem det(1L);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return FieldElem(0L);
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const FieldElem inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) {
                continue;
            }
            const FieldElem factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
            }
        }
    }
    return det;
}

} // namespace

bool row_deleted_minors_nonzero(const std::vector<std::vector<FieldElem>> &rows)
{
    const std::size_t k = rows.size();
    for (const auto &r : rows) {
        if (r.size() + 1 != k) {
            fail(ErrorCode::DimensionMismatch, "need a k x (k-1) matrix");
        }
    }
    for (std::size_t skip = 0; skip < k; ++skip) {
        std::vector<std::vector<FieldElem>> minor;
        for (std::size_t r = 0; r < k; ++r) {
            if (r != skip) {
                minor.push_back(rows[r]);
            }
        }
        if (determinant(minor).is_zero()) {
            return false;
        }
    }
    return true;
}

NcResult is_nc(const WeierstrassPoly &f, const Point &at)
{
    const WeierstrassPoly g = translate_to_point(f, at);
    const auto flags = assert_form(g);
    if (!flags.in_ideal || !flags.order_k) {
        return {false, "not of order k at the point"};
    }
    const SplitResult res = split(g, 1, 0);
    if (res.status == SplitStatus::NeedsExtension) {
        fail(ErrorCode::NeedsExtension, res.diagnostics.empty() ? "split" : res.diagnostics.back());
    }
    if (res.status == SplitStatus::TruncationInsufficient) {
        fail(ErrorCode::TruncationInsufficient, res.diagnostics.empty() ? "split" : res.diagnostics.back());
    }
    if (res.status != SplitStatus::Split) {
        return {false, "no splitting with p = 1, q = 0"};
    }
    std::vector<std::vector<FieldElem>> rows;
    for (const auto &row : res.root_system->bij) {
        std::vector<FieldElem> vals;
        for (const auto &b : row) {
            if (b.prec() <= 0) {
                fail(ErrorCode::TruncationInsufficient, "linear coefficient unknown at the point");
            }
            vals.push_back(b.coeff(0));
        }
        rows.push_back(std::move(vals));
    }
    if (!row_deleted_minors_nonzero(rows)) {
        return {false, "linear parts at the point are dependent"};
    }
    return {true, "splits with independent linear parts"};
}

ATWProxy atw_proxy(const WeierstrassPoly &f, const Point &at)
{
    const LowestPart low = lowest_homogeneous_part(f, at);
    ATWProxy out;
    out.order = low.degree;
    out.lowest_is_xz = low.xz_pure && low.degree == f.k();
    if (!out.lowest_is_xz) {
        return out;
    }
    std::vector<Form> seeds;
    try {
        seeds = factor_linear_forms(low.xz_forms(f.k(), f.num_x()));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotReduced || e.code() == ErrorCode::NotAProductOfLinearForms ||
            e.code() == ErrorCode::NotDivisible) {
            return out;
        }
        throw;
    }
    std::vector<std::vector<FieldElem>> rows;
    for (const auto &l : seeds) {
        std::vector<FieldElem> vals;
        for (int j = 0; j < f.num_x(); ++j) {
            XMonomial mono(static_cast<std::size_t>(f.num_x()), 0);
            mono[static_cast<std::size_t>(j)] = 1;
            vals.push_back(l.coeff(mono).coeff(0));
        }
        rows.push_back(std::move(vals));
    }
    out.lowest_nc = static_cast<int>(rows.size()) == f.num_x() + 1 && row_deleted_minors_nonzero(rows);
    return out;
}

} // namespace fsplit
