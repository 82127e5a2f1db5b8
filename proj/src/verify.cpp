#include <fsplit/errors.hpp>
#include <fsplit/verify.hpp>

#include <algorithm>
#include <sstream>

namespace fsplit
{

std::string to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::satisfied:
        return "satisfied";
    case Hypothesis::violated:
        return "violated";
    case Hypothesis::untestable:
        break;
    }
    return "untestable";
}

std::string to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::holds:
        return "holds";
    case Conclusion::fails:
        return "fails";
    case Conclusion::vacuous:
        break;
    }
    return "vacuous";
}

namespace
{

// Dense polynomial over Q in n variables, each of degree <= deg.
class Dense
{
public:
    Dense(int n, int deg) : n_(n), base_(deg + 1)
    {
        std::size_t size = 1;
        for (int i = 0; i < n; ++i) {
            size *= static_cast<std::size_t>(base_);
        }
        c_.assign(size, Rational(0));
    }

    static Dense constant(int n, int deg, const Rational &a)
    {
        Dense d(n, deg);
        d.c_[0] = a;
        return d;
    }

    std::vector<int> exps(std::size_t idx) const
    {
        std::vector<int> e(static_cast<std::size_t>(n_));
        for (auto &x : e) {
            x = static_cast<int>(idx % static_cast<std::size_t>(base_));
            idx /= static_cast<std::size_t>(base_);
        }
        return e;
    }

    std::size_t index(const std::vector<int> &e) const
    {
        std::size_t idx = 0;
        for (int i = n_ - 1; i >= 0; --i) {
            idx = idx * static_cast<std::size_t>(base_) + static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
        }
        return idx;
    }

    // Product with sum_i l[i] * var_i.
    Dense times_linear(const std::vector<Rational> &l) const
    {
        Dense out(n_, base_ - 1);
        std::size_t stride = 1;
        for (int i = 0; i < n_; ++i) {
            if (l[static_cast<std::size_t>(i)] != 0) {
                for (std::size_t idx = 0; idx < c_.size(); ++idx) {
                    if (c_[idx] == 0) {
                        continue;
                    }
                    if ((idx / stride) % static_cast<std::size_t>(base_) == static_cast<std::size_t>(base_ - 1)) {
                        fail(ErrorCode::InvalidParams, "dense degree bound exceeded");
                    }
                    out.c_[idx + stride] += c_[idx] * l[static_cast<std::size_t>(i)];
                }
            }
            stride *= static_cast<std::size_t>(base_);
        }
        return out;
    }

    Dense &operator+=(const Dense &o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        return *this;
    }
    Dense &operator-=(const Dense &o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        return *this;
    }
    friend Dense operator-(Dense a, const Dense &b)
    {
        return a -= b;
    }
    friend bool operator==(const Dense &a, const Dense &b)
    {
        return a.c_ == b.c_;
    }

    const std::vector<Rational> &coeffs() const
    {
        return c_;
    }

private:
    int n_;
    int base_;
    std::vector<Rational> c_;
};

// sigma_j of the linear forms.
Dense sigma(int j, const std::vector<std::vector<Rational>> &forms, int n, int deg)
{
    std::vector<Dense> e(static_cast<std::size_t>(j + 1), Dense(n, deg));
    e[0] = Dense::constant(n, deg, Rational(1));
    for (const auto &l : forms) {
        for (int t = j; t >= 1; --t) {
            e[static_cast<std::size_t>(t)] += e[static_cast<std::size_t>(t - 1)].times_linear(l);
        }
    }
    return e[static_cast<std::size_t>(j)];
}

std::vector<Rational> unit(int n, int i, Rational c = Rational(1))
{
    std::vector<Rational> l(static_cast<std::size_t>(n), Rational(0));
    l[static_cast<std::size_t>(i)] = c;
    return l;
}

std::string mono_str(const std::vector<int> &e)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        os << (first ? "" : "*") << "x" << i + 1;
        if (e[i] > 1) {
            os << "^" << e[i];
        }
        first = false;
    }
    return first ? "1" : os.str();
}

std::string point_str(const Point &at)
{
    std::ostringstream os;
    for (std::size_t j = 0; j < at.w0.size(); ++j) {
        os << (j ? "," : "") << "w" << j + 1 << "=" << at.w0[j].get_str();
    }
    for (std::size_t j = 0; j < at.u0.size(); ++j) {
        os << ",u" << j + 1 << "=" << at.u0[j].str();
    }
    const std::string s = os.str();
    return s.empty() ? "origin" : s;
}

void finish(LemmaReport &rep, bool conclusion_ok)
{
    if (rep.hypothesis != Hypothesis::satisfied) {
        rep.conclusion = Conclusion::vacuous;
    } else {
        rep.conclusion = conclusion_ok ? Conclusion::holds : Conclusion::fails;
    }
}

bool add_check(LemmaReport &rep, const std::string &name, bool ok)
{
    rep.checks.emplace_back(name, ok);
    return ok;
}

// Sets the hypothesis from the proxy; returns false if it could not be decided.
bool proxy_hypothesis(LemmaReport &rep, const WeierstrassPoly &f, const Point &at)
{
    try {
        const ATWProxy px = atw_proxy(f, at);
        add_check(rep, "lowest_is_xz", px.lowest_is_xz);
        add_check(rep, "lowest_nc", px.lowest_nc);
        rep.hypothesis = px.lowest_is_xz && px.lowest_nc ? Hypothesis::satisfied : Hypothesis::violated;
        if (!px.lowest_is_xz) {
            rep.notes.push_back("proxy: lowest part of degree " + px.order.get_str() + " is not an (x, z)-form of degree k");
        } else if (!px.lowest_nc) {
            rep.notes.push_back("proxy: lowest part is not nc(k)");
        }
        return true;
    } catch (const Error &e) {
        rep.hypothesis = Hypothesis::untestable;
        rep.notes.push_back(std::string("proxy undecided: ") + e.what());
        return false;
    }
}

WeierstrassPoly at_point(const WeierstrassPoly &f, const Point &at)
{
    return at.at_origin() ? f : translate_to_point(f, at);
}

// v^0 coefficients of b_ij; nullopt when one is unknown.
std::optional<std::vector<std::vector<FieldElem>>> rows_at_zero(const RootSystem &rs)
{
    std::vector<std::vector<FieldElem>> rows;
    for (const auto &row : rs.bij) {
        std::vector<FieldElem> vals;
        for (const auto &b : row) {
            if (b.prec() <= 0) {
                return std::nullopt;
            }
            vals.push_back(b.coeff(0));
        }
        rows.push_back(std::move(vals));
    }
    return rows;
}

bool all_distinct(const std::vector<std::vector<FieldElem>> &rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[i] == rows[j]) {
                return false;
            }
        }
    }
    return true;
}

bool has_pole(const PuiseuxSeries &b)
{
    for (const auto &[e, c] : b.terms()) {
        for (const auto &beta : e.beta) {
            if (beta < 0) {
                return true;
            }
        }
    }
    return false;
}

std::optional<std::vector<std::vector<FieldElem>>> invert(std::vector<std::vector<FieldElem>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<FieldElem>> inv(n, std::vector<FieldElem>(n, FieldElem(0L)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = FieldElem(1L);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const FieldElem s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) {
                continue;
            }
            const FieldElem t = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= t * a[col][j];
                inv[i][j] -= t * inv[col][j];
            }
        }
    }
    return inv;
}

// b_i = x_i + O(x^2) for i < k after x -> B^{-1} x.
std::optional<std::vector<PuiseuxSeries>> normalize(const RootSystem &rs)
{
    const auto rows = rows_at_zero(rs);
    if (!rows) {
        return std::nullopt;
    }
    std::vector<std::vector<FieldElem>> b(rows->begin(), rows->end() - 1);
    const auto inv = invert(b);
    if (!inv) {
        return std::nullopt;
    }
    const auto &b0 = rs.roots.front();
    const int m = b0.num_x();
    std::map<int, PuiseuxSeries> sub;
    for (int j = 0; j < m; ++j) {
        PuiseuxSeries s(b0.r(), m, 1, 0, b0.trunc());
        for (int l = 0; l < m; ++l) {
            s += PuiseuxSeries::x(b0.r(), m, l, b0.trunc()).scaled((*inv)[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
        }
        sub.emplace(j, s);
    }
    std::vector<PuiseuxSeries> out;
    for (const auto &r : rs.roots) {
        out.push_back(substitute(r, sub));
    }
    return out;
}

ExpPair unit_pair(int m, int i)
{
    std::vector<int> alpha(static_cast<std::size_t>(m), 0);
    alpha[static_cast<std::size_t>(i)] = 1;
    return ExpPair{alpha, {Rational(0)}};
}

std::string pair_str(const ExpPair &e)
{
    std::ostringstream os;
    os << "(" << mono_str(e.alpha) << ", " << e.beta_total().get_str() << ")";
    return os.str();
}

// Pole decomposition x_i + c x^a0 w^b0 + Q_i + R_i of the normalized roots.
bool decomposition_holds(const std::vector<PuiseuxSeries> &roots, std::string &detail)
{
    const int k = static_cast<int>(roots.size());
    const int m = roots.front().num_x();
    std::optional<ExpPair> e0;
    for (int i = 0; i + 1 < k; ++i) {
        for (const auto &[e, c] : roots[static_cast<std::size_t>(i)].terms()) {
            if (e.beta_total() < 0 && (!e0 || compare_support(e, *e0) < 0)) {
                e0 = e;
            }
        }
    }
    for (int i = 0; i + 1 < k; ++i) {
        const ExpPair lin = unit_pair(m, i);
        for (const auto &[e, c] : roots[static_cast<std::size_t>(i)].terms()) {
            if (e == lin || (e0 && e == *e0)) {
                continue;
            }
            const Rational beta = e.beta_total();
            const bool ok = beta >= 0 ? e.alpha_total() + beta >= 2 : (e0 && compare_support(*e0, e) < 0);
            if (!ok) {
                detail = "root " + std::to_string(i + 1) + " term " + pair_str(e);
                return false;
            }
        }
    }
    detail = e0 ? "leading pole " + pair_str(*e0) : "no pole terms";
    return true;
}

} // namespace

LemmaReport verify_negpower(const RootSystem &rs, const WeierstrassPoly &f)
{
    LemmaReport rep;
    rep.lemma = "negpower";
    bool order_ok = true;
    for (int j = 2; j <= f.k(); ++j) {
        const auto v = f.a(j).valuation(Grading::xz_total);
        if (v && *v < j) {
            order_ok = false;
            rep.notes.push_back("a_" + std::to_string(j) + " has (w, x)-order " + v->get_str());
        }
    }
    rep.hypothesis = order_ok ? Hypothesis::satisfied : Hypothesis::violated;
    bool roots_ok = true;
    for (const auto &b : rs.roots) {
        const auto v = b.valuation(Grading::xz_total);
        roots_ok = roots_ok && (!v || *v >= 1);
    }
    add_check(rep, "order iff roots of order >= 1", roots_ok == order_ok);
    bool d_ok = true;
    std::ostringstream ds;
    for (std::size_t i = 0; i < rs.bij.size(); ++i) {
        std::optional<std::int64_t> best;
        std::int64_t bound = LaurentSeries::exact;
        for (const auto &b : rs.bij[i]) {
            if (auto v = b.valuation(); v && (!best || *v < *best)) {
                best = v;
            }
            bound = std::min(bound, b.prec());
        }
        const std::int64_t d = best ? *best : bound;
        ds << (i ? "," : "") << (best ? std::to_string(d) : ">=" + std::to_string(d));
        d_ok = d_ok && d >= 0;
    }
    add_check(rep, "d_i >= 0", d_ok);
    finish(rep, d_ok && roots_ok == order_ok);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["d"] = ds.str();
        rep.witness["f"] = f.str();
    }
    rep.notes.push_back("d = (" + ds.str() + ") over p = " + std::to_string(rs.p));
    return rep;
}

LemmaReport verify_homog(const WeierstrassPoly &f, const RootSystem &rs, const Point &at)
{
    LemmaReport rep;
    rep.lemma = "homog";
    proxy_hypothesis(rep, f, at);
    PuiseuxSeries sum(rs.roots.front().r(), rs.roots.front().num_x(), rs.p, rs.q, rs.roots.front().trunc());
    for (const auto &b : rs.roots) {
        sum += b;
    }
    if (!add_check(rep, "sum of roots is zero", sum.is_zero())) {
        rep.hypothesis = Hypothesis::violated;
    }
    if (rep.hypothesis != Hypothesis::satisfied) {
        finish(rep, true);
        return rep;
    }
    const auto rows = rows_at_zero(rs);
    if (!rows) {
        rep.hypothesis = Hypothesis::untestable;
        rep.notes.push_back("b_ij(0, 0) beyond the truncation");
        finish(rep, true);
        return rep;
    }
    std::vector<std::vector<FieldElem>> at0;
    const std::vector<Cyclotomic> u0(static_cast<std::size_t>(f.s()), Cyclotomic(0));
    for (const auto &row : *rows) {
        std::vector<FieldElem> vals;
        for (const auto &c : row) {
            vals.emplace_back(c.evaluate(u0));
        }
        at0.push_back(std::move(vals));
    }
    const bool item1 = add_check(rep, "(1) row-deleted minors invertible", row_deleted_minors_nonzero(at0));

    bool item2 = false;
    try {
        const LowestPart low = lowest_homogeneous_part(f, at);
        const auto forms = factor_linear_forms(low.xz_forms(f.k(), f.num_x()));
        std::vector<std::vector<FieldElem>> lam;
        for (const auto &l : forms) {
            std::vector<FieldElem> vals;
            for (int j = 0; j < f.num_x(); ++j) {
                XMonomial mono(static_cast<std::size_t>(f.num_x()), 0);
                mono[static_cast<std::size_t>(j)] = 1;
                vals.emplace_back(l.coeff(mono).coeff(0).evaluate(u0));
            }
            lam.push_back(std::move(vals));
        }
        auto sorted_a = lam;
        auto sorted_b = at0;
        auto less = [](const std::vector<FieldElem> &a, const std::vector<FieldElem> &b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) {
                    return a[i].str() < b[i].str();
                }
            }
            return false;
        };
        std::sort(sorted_a.begin(), sorted_a.end(), less);
        std::sort(sorted_b.begin(), sorted_b.end(), less);
        const bool same = add_check(rep, "lowest part factors match b_ij(0, 0)", sorted_a == sorted_b);
        item2 = row_deleted_minors_nonzero(lam) && same;
    } catch (const Error &e) {
        rep.notes.push_back(std::string("lowest part: ") + e.what());
    }
    add_check(rep, "(2) lowest part is nc(k)", item2);

    bool item3 = rs.d_values.has_value();
    if (item3) {
        for (int d : *rs.d_values) {
            item3 = item3 && d == 0;
        }
    }
    add_check(rep, "(3) d_i = 0", item3);
    finish(rep, item1 && item2 && item3);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["f"] = f.str();
        rep.witness["at"] = point_str(at);
    }
    return rep;
}

LemmaReport verify_p1(const WeierstrassPoly &f, const Point &at, int p_max, int q_max)
{
    LemmaReport rep;
    rep.lemma = "p1";
    proxy_hypothesis(rep, f, at);
    const SplitResult res = split(at_point(f, at), p_max, q_max);
    if (res.status != SplitStatus::Split) {
        rep.notes.push_back("split: " + to_string(res.status));
        if (res.status != SplitStatus::NonSplitEvidence) {
            rep.hypothesis = Hypothesis::untestable;
        }
        finish(rep, false);
        if (rep.conclusion == Conclusion::fails) {
            rep.witness["f"] = f.str();
            rep.witness["split"] = to_string(res.status);
        }
        return rep;
    }
    rep.notes.push_back("realized p = " + std::to_string(res.p) + ", q = " + std::to_string(res.q));
    if (res.p > 1) {
        bool nontrivial = false;
        try {
            const auto perm = mu_p_action(*res.root_system);
            for (std::size_t i = 0; i < perm.size(); ++i) {
                nontrivial = nontrivial || perm[i] != static_cast<int>(i);
            }
        } catch (const Error &e) {
            rep.notes.push_back(std::string("mu_p: ") + e.what());
        }
        add_check(rep, "mu_p acts nontrivially", nontrivial);
        const auto rows = rows_at_zero(*res.root_system);
        add_check(rep, "rows collide at w = 0", rows && !all_distinct(*rows));
    }
    finish(rep, res.p == 1);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["f"] = f.str();
        rep.witness["at"] = point_str(at);
        rep.witness["p"] = std::to_string(res.p);
    }
    return rep;
}

LemmaReport verify_q0(const WeierstrassPoly &f, const Point &at, int p_max, int q_max)
{
    if (f.r() != 1) {
        fail(ErrorCode::MultipleWVariables, "q = 0 check needs r = 1");
    }
    LemmaReport rep;
    rep.lemma = "q0";
    proxy_hypothesis(rep, f, at);
    const SplitResult res = split(at_point(f, at), p_max, q_max);
    if (res.status != SplitStatus::Split) {
        rep.notes.push_back("split: " + to_string(res.status));
        if (res.status != SplitStatus::NonSplitEvidence) {
            rep.hypothesis = Hypothesis::untestable;
        }
        finish(rep, false);
        if (rep.conclusion == Conclusion::fails) {
            rep.witness["f"] = f.str();
            rep.witness["split"] = to_string(res.status);
        }
        return rep;
    }
    const RootSystem &rs = *res.root_system;
    bool poles = false;
    for (const auto &b : rs.roots) {
        poles = poles || has_pole(b);
    }
    rep.notes.push_back("realized p = " + std::to_string(res.p) + ", q = " + std::to_string(res.q));
    add_check(rep, "no negative w-powers", !poles);

    const auto normal = normalize(rs);
    bool claim = false;
    if (!normal) {
        if (rep.hypothesis == Hypothesis::satisfied) {
            fail(ErrorCode::NotNormalizable, "b_ij(0, u) for i < k is singular");
        }
        rep.notes.push_back("normalization unavailable: b_ij(0, u) is singular");
    } else {
        const int k = static_cast<int>(normal->size());
        const int m = normal->front().num_x();
        claim = true;
        for (int i = 0; i < k; ++i) {
            const auto &b = (*normal)[static_cast<std::size_t>(i)];
            const ExpPair want = unit_pair(m, std::min(i, m - 1));
            const ExpPair got = b.support_min();
            if (!(got == want)) {
                claim = false;
                rep.notes.push_back("support_min b_" + std::to_string(i + 1) + " = " + pair_str(got));
            }
        }
        add_check(rep, "support-minimum claim", claim);
        std::string detail;
        add_check(rep, "pole decomposition", decomposition_holds(*normal, detail));
        rep.notes.push_back(detail);
    }
    finish(rep, res.q == 0 && !poles && claim);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["f"] = f.str();
        rep.witness["at"] = point_str(at);
        rep.witness["q"] = std::to_string(res.q);
    }
    return rep;
}

LemmaReport verify_sigma_identity(int k, int h)
{
    if (k < 2 || k > 6 || h < 1 || h >= k) {
        fail(ErrorCode::InvalidParams, "sigma identity needs 2 <= k <= 6, 1 <= h < k");
    }
    LemmaReport rep;
    rep.lemma = "sigma";
    rep.hypothesis = Hypothesis::satisfied;
    const int j = k - h + 1;

    // xi_1..xi_k, y_1..y_k
    const int n = 2 * k;
    std::vector<std::vector<Rational>> xy;
    std::vector<std::vector<Rational>> xi;
    for (int i = 0; i < k; ++i) {
        auto l = unit(n, i);
        xi.push_back(l);
        l[static_cast<std::size_t>(k + i)] = 1;
        xy.push_back(l);
    }
    Dense rest = sigma(j, xy, n, 1) - sigma(j, xi, n, 1);
    for (int i = 0; i < k; ++i) {
        auto others = xi;
        others.erase(others.begin() + i);
        rest -= sigma(j - 1, others, n, 1).times_linear(unit(n, k + i));
    }
    bool first_order = true;
    for (std::size_t idx = 0; idx < rest.coeffs().size(); ++idx) {
        if (rest.coeffs()[idx] == 0) {
            continue;
        }
        const auto e = rest.exps(idx);
        int ydeg = 0;
        for (int i = k; i < n; ++i) {
            ydeg += e[static_cast<std::size_t>(i)];
        }
        if (ydeg < 2) {
            first_order = false;
            rep.witness["remainder term"] = mono_str(e);
        }
    }
    add_check(rep, "remainder lies in (y)^2", first_order);

    // Summands in x_1..x_{k-1} with xi_k = -(x_1 + ... + x_{k-1}).
    const int m = k - 1;
    const int deg = k;
    std::vector<std::vector<Rational>> xs;
    for (int i = 0; i < m; ++i) {
        xs.push_back(unit(m, i));
    }
    const std::vector<Rational> neg_sum(static_cast<std::size_t>(m), Rational(-1));
    const Dense full = sigma(k - h, xs, m, deg);
    std::vector<Dense> summand;
    bool forms_agree = true;
    for (int i = 0; i < m; ++i) {
        auto hat = xs;
        hat.erase(hat.begin() + i);
        auto with_k = hat;
        with_k.push_back(neg_sum);
        const Dense left = sigma(k - h, with_k, m, deg) - full;
        Dense right = sigma(k - h - 1, hat, m, deg).times_linear(neg_sum);
        right += sigma(k - h, hat, m, deg);
        right -= full;
        forms_agree = forms_agree && left == right;
        summand.push_back(right);
    }
    add_check(rep, "summand forms agree", forms_agree);

    std::vector<int> gamma(static_cast<std::size_t>(m), 0);
    for (int i = h; i < m; ++i) {
        gamma[static_cast<std::size_t>(i)] = 1;
    }
    gamma[static_cast<std::size_t>(m - 1)] += h < m ? 1 : 0;
    if (h == m) {
        gamma[static_cast<std::size_t>(m - 1)] = 1;
    }
    rep.notes.push_back("gamma_" + std::to_string(h) + " = " + mono_str(gamma));
    const std::size_t gidx = summand.front().index(gamma);

    bool unique = summand[static_cast<std::size_t>(h - 1)].coeffs()[gidx] != 0;
    for (int i = h; i < m; ++i) {
        unique = unique && summand[static_cast<std::size_t>(i)].coeffs()[gidx] == 0;
    }
    add_check(rep, "gamma occurs only in summand h", unique);

    bool minimal = true;
    for (int i = h - 1; i < m; ++i) {
        const Dense &s = summand[static_cast<std::size_t>(i)];
        for (std::size_t idx = 0; idx < s.coeffs().size(); ++idx) {
            if (s.coeffs()[idx] != 0 && s.exps(idx) < gamma) {
                minimal = false;
                rep.witness["smaller monomial"] = mono_str(s.exps(idx));
            }
        }
    }
    add_check(rep, "gamma is lex-minimal", minimal);
    finish(rep, first_order && forms_agree && unique && minimal);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["k"] = std::to_string(k);
        rep.witness["h"] = std::to_string(h);
    } else {
        rep.witness.clear();
    }
    return rep;
}

LemmaReport verify_clopen(const WeierstrassPoly &f, const std::vector<Point> &samples)
{
    LemmaReport rep;
    rep.lemma = "clopen";
    std::vector<std::string> nc_at;
    std::vector<std::string> not_nc_at;
    std::vector<std::string> proxy_false_at;
    for (const auto &at : samples) {
        const ATWProxy px = atw_proxy(f, at);
        if (!(px.lowest_is_xz && px.lowest_nc)) {
            proxy_false_at.push_back(point_str(at));
            continue;
        }
        (is_nc(f, at).nc ? nc_at : not_nc_at).push_back(point_str(at));
    }
    auto join = [](const std::vector<std::string> &v) {
        std::string s;
        for (const auto &x : v) {
            s += (s.empty() ? "" : "; ") + x;
        }
        return s.empty() ? "-" : s;
    };
    rep.notes.push_back("nc at: " + join(nc_at));
    rep.notes.push_back("not nc at: " + join(not_nc_at));
    rep.notes.push_back("proxy false at: " + join(proxy_false_at));
    rep.hypothesis = nc_at.empty() && not_nc_at.empty() ? Hypothesis::violated : Hypothesis::satisfied;
    const bool constant = nc_at.empty() || not_nc_at.empty();
    add_check(rep, "nc constant over proxy-true samples", constant);
    finish(rep, constant);
    if (rep.conclusion == Conclusion::fails) {
        rep.witness["nc"] = join(nc_at);
        rep.witness["not nc"] = join(not_nc_at);
    } else if (rep.conclusion == Conclusion::holds) {
        rep.notes.push_back("consistent with the nc locus being open and closed on the samples");
    }
    return rep;
}

} // namespace fsplit
