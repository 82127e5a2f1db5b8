#include <fsplit/errors.hpp>
#include <fsplit/forms.hpp>
#include <fsplit/weierstrass.hpp>

#include <algorithm>
#include <numeric>

namespace fsplit
{

WeierstrassPoly::WeierstrassPoly(int k, std::vector<PuiseuxSeries> a, int r, int num_x, int s)
    : k_(k), r_(r), m_(num_x < 0 ? k - 1 : num_x), s_(s), a_(std::move(a))
{
    if (k < 1 || r < 0 || s < 0) {
        fail(ErrorCode::InvalidParams, "bad Weierstrass dimensions");
    }
    if (static_cast<int>(a_.size()) != k - 1) {
        fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(k - 1) + " coefficients a_2..a_k");
    }
    for (const auto &c : a_) {
        if (c.r() != r_ || c.num_x() != m_) {
            fail(ErrorCode::DimensionMismatch, "coefficient over different variables");
        }
    }
}

const PuiseuxSeries &WeierstrassPoly::a(int j) const
{
    if (j < 2 || j > k_) {
        fail(ErrorCode::IndexOutOfRange, "coefficient a_" + std::to_string(j));
    }
    return a_[static_cast<std::size_t>(j - 2)];
}

int WeierstrassPoly::trunc() const
{
    int n = 1 << 20;
    for (const auto &c : a_) {
        n = std::min(n, c.trunc());
    }
    return n;
}

PuiseuxSeries WeierstrassPoly::evaluate(const PuiseuxSeries &value) const
{
    // Horner with the absent a_1 = 0.
    const PuiseuxSeries one = PuiseuxSeries::constant(r_, m_, FieldElem(1), value.trunc());
    PuiseuxSeries acc = one;
    for (int j = 1; j <= k_; ++j) {
        acc = acc * value;
        if (j >= 2) {
            acc += a(j);
        }
    }
    return acc;
}

WeierstrassPoly WeierstrassPoly::map_coeffs(const std::function<PuiseuxSeries(int, const PuiseuxSeries &)> &fn) const
{
    std::vector<PuiseuxSeries> a;
    for (int j = 2; j <= k_; ++j) {
        a.push_back(fn(j, this->a(j)));
    }
    const int r = a.empty() ? r_ : a.front().r();
    const int m = a.empty() ? m_ : a.front().num_x();
    return WeierstrassPoly(k_, std::move(a), r, m, s_);
}

std::string WeierstrassPoly::str() const
{
    std::string out = "z^" + std::to_string(k_);
    for (int j = 2; j <= k_; ++j) {
        out += " + [" + a(j).str() + "]*z^" + std::to_string(k_ - j);
    }
    return out;
}

bool equal_mod_trunc(const WeierstrassPoly &f, const WeierstrassPoly &g)
{
    if (f.k() != g.k()) {
        return false;
    }
    for (int j = 2; j <= f.k(); ++j) {
        if (!equal_mod_trunc(f.a(j), g.a(j))) {
            return false;
        }
    }
    return true;
}

const std::vector<int> &RootSystem::d() const
{
    if (!d_values) {
        fail(ErrorCode::DegenerateLinearPart, "some root has no nonzero linear coefficient at this truncation");
    }
    return *d_values;
}

LaurentSeries RootSystem::reduced(std::size_t i, std::size_t j) const
{
    return bij.at(i).at(j).shifted(-d().at(i));
}

RootSystem make_root_system(std::vector<PuiseuxSeries> roots)
{
    RootSystem rs;
    if (roots.empty()) {
        return rs;
    }
    int p = 1;
    int q = 0;
    int n = roots.front().trunc();
    for (const auto &b : roots) {
        p = std::lcm(p, b.p());
        q = std::max(q, b.q());
        n = std::min(n, b.trunc());
    }
    for (auto &b : roots) {
        b = b.reframed(p, q).truncated(n);
    }
    rs.p = p;
    rs.q = q;
    rs.roots = std::move(roots);
    if (rs.roots.front().r() != 1) {
        return rs;
    }
    const int m = rs.roots.front().num_x();
    std::vector<int> d;
    bool degenerate = false;
    for (const auto &b : rs.roots) {
        const Form lin = x_forms(b, p, 1)[1];
        std::vector<LaurentSeries> row;
        std::optional<std::int64_t> best;
        for (int j = 0; j < m; ++j) {
            XMonomial mono(static_cast<std::size_t>(m), 0);
            mono[static_cast<std::size_t>(j)] = 1;
            row.push_back(lin.coeff(mono));
            if (auto v = row.back().valuation(); v && (!best || *v < *best)) {
                best = v;
            }
        }
        rs.bij.push_back(std::move(row));
        if (best) {
            d.push_back(static_cast<int>(*best));
        } else {
            degenerate = true;
        }
    }
    if (!degenerate) {
        rs.d_values = std::move(d);
    }
    return rs;
}

namespace
{

bool root_less(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    if (a.is_zero() || b.is_zero()) {
        return !a.is_zero() && b.is_zero();
    }
    const auto c = compare_support(a.support_min(), b.support_min());
    if (c != 0) {
        return c < 0;
    }
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        const auto ce = compare_support(ta[i].first, tb[i].first);
        if (ce != 0) {
            return ce < 0;
        }
        if (ta[i].second != tb[i].second) {
            return canonical_less(ta[i].second, tb[i].second);
        }
    }
    return ta.size() < tb.size();
}

} // namespace

void sort_roots(std::vector<PuiseuxSeries> &roots)
{
    std::stable_sort(roots.begin(), roots.end(), root_less);
}

PuiseuxSeries elementary_symmetric(int j, const std::vector<PuiseuxSeries> &values)
{
    const int n = static_cast<int>(values.size());
    if (j < 0 || j > n) {
        fail(ErrorCode::IndexOutOfRange, "sigma_" + std::to_string(j) + " of " + std::to_string(n) + " values");
    }
    if (values.empty()) {
        return PuiseuxSeries::constant(0, 0, FieldElem(1), 1 << 20);
    }
    const int r = values.front().r();
    const int m = values.front().num_x();
    int trunc = values.front().trunc();
    for (const auto &v : values) {
        trunc = std::min(trunc, v.trunc());
    }
    // e[i] = sigma_i of the values seen so far.
    std::vector<PuiseuxSeries> e(static_cast<std::size_t>(j + 1), PuiseuxSeries(r, m, 1, 0, trunc));
    e[0] = PuiseuxSeries::constant(r, m, FieldElem(1), trunc);
    for (const auto &v : values) {
        for (int i = j; i >= 1; --i) {
            e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * v;
        }
    }
    return e[static_cast<std::size_t>(j)];
}

std::pair<WeierstrassPoly, RootSystem> from_roots(const std::vector<PuiseuxSeries> &roots, int s)
{
    if (roots.empty()) {
        fail(ErrorCode::InvalidParams, "from_roots needs at least one root");
    }
    const int r = roots.front().r();
    const int m = roots.front().num_x();
    std::vector<PuiseuxSeries> all;
    PuiseuxSeries sum(r, m, 1, 0, roots.front().trunc());
    for (const auto &b : roots) {
        if (b.r() != r || b.num_x() != m) {
            fail(ErrorCode::DimensionMismatch, "roots over different variables");
        }
        const PuiseuxSeries::Exps zero(static_cast<std::size_t>(r + m), 0);
        if (b.internal_terms().count(zero) != 0) {
            fail(ErrorCode::NonzeroConstantTerm, "root " + b.str() + " has a constant term");
        }
        all.push_back(b);
        sum += b;
    }
    all.push_back(-sum);
    const int k = static_cast<int>(all.size());
    std::vector<PuiseuxSeries> a;
    for (int j = 2; j <= k; ++j) {
        a.push_back(elementary_symmetric(j, all));
    }
    return {WeierstrassPoly(k, std::move(a), r, m, s), make_root_system(std::move(all))};
}

std::pair<WeierstrassPoly, PuiseuxSeries> tschirnhaus_normalize(const std::vector<PuiseuxSeries> &c, int s)
{
    const int k = static_cast<int>(c.size());
    if (k < 1) {
        fail(ErrorCode::InvalidParams, "polynomial of degree 0");
    }
    const int r = c.front().r();
    const int m = c.front().num_x();
    int trunc = c.front().trunc();
    for (const auto &x : c) {
        trunc = std::min(trunc, x.trunc());
    }
    const PuiseuxSeries shift = c.front().scaled(FieldElem(make_rational(1, k)));
    const PuiseuxSeries neg = -shift;
    // powers of -shift
    std::vector<PuiseuxSeries> pw{PuiseuxSeries::constant(r, m, FieldElem(1), trunc)};
    for (int i = 1; i <= k; ++i) {
        pw.push_back(pw.back() * neg);
    }
    auto binom = [](int n, int i) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        return Rational(b);
    };
    // coefficient of z^{k-i} in sum_j c_j (z - shift)^{k-j}, c_0 = 1
    std::vector<PuiseuxSeries> a;
    for (int i = 2; i <= k; ++i) {
        PuiseuxSeries acc = pw[static_cast<std::size_t>(i)].scaled(FieldElem(binom(k, i)));
        for (int j = 1; j <= i; ++j) {
            acc += c[static_cast<std::size_t>(j - 1)] * pw[static_cast<std::size_t>(i - j)].scaled(FieldElem(binom(k - j, i - j)));
        }
        a.push_back(acc);
    }
    return {WeierstrassPoly(k, std::move(a), r, m, s), shift};
}

FormFlags assert_form(const WeierstrassPoly &f)
{
    FormFlags flags{true, true};
    if (f.k() >= 2) {
        const auto v = f.a(f.k()).valuation(Grading::x_only);
        flags.in_ideal = !v || *v >= 1;
    }
    for (int j = 2; j <= f.k(); ++j) {
        const auto v = f.a(j).valuation(Grading::x_only);
        if (v && *v < j) {
            flags.order_k = false;
        }
    }
    return flags;
}

} // namespace fsplit
