#include <fsplit/errors.hpp>
#include <fsplit/newton.hpp>

#include <algorithm>

namespace fsplit
{

namespace
{

// Divisors of |n| (n != 0), or nullopt when n is too large to enumerate.
std::optional<std::vector<Integer>> divisors(const Integer &n)
{
    Integer m = abs(n);
    if (m > Integer("100000000000000")) {
        return std::nullopt;
    }
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) {
                large.push_back(m / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

template <class T> T horner(const std::vector<T> &c, const T &y)
{
    T acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * y + c[i];
    }
    return acc;
}

// c / (y - root), c low to high.
template <class T> std::vector<T> deflate(const std::vector<T> &c, const T &root)
{
    const std::size_t n = c.size() - 1;
    std::vector<T> out(n);
    T carry = c[n];
    for (std::size_t i = n; i-- > 0;) {
        out[i] = carry;
        carry = c[i] + carry * root;
    }
    return out;
}

// Rational roots with multiplicity; c is deflated in place.
void peel_rational_roots(std::vector<Rational> &c, std::vector<Rational> &out)
{
    while (c.size() > 1 && c[0] == 0) {
        out.emplace_back(0);
        c.erase(c.begin());
    }
    if (c.size() <= 1) {
        return;
    }
    Integer lcm_den = 1;
    for (const auto &q : c) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    const Integer a0 = Rational(c.front() * lcm_den).get_num();
    const Integer an = Rational(c.back() * lcm_den).get_num();
    const auto num = divisors(a0);
    const auto den = divisors(an);
    if (!num || !den) {
        return;
    }
    for (const auto &d : *num) {
        for (const auto &e : *den) {
            for (int sign : {1, -1}) {
                Rational cand(sign * d, e);
                cand.canonicalize();
                if (cand.get_den() != e) {
                    continue;
                }
                while (c.size() > 1 && horner(c, cand) == 0) {
                    out.push_back(cand);
                    c = deflate(c, cand);
                }
            }
        }
    }
}

// Roots of a monic polynomial of degree <= 2 or a biquadratic, constants in
// the tower.
std::vector<Cyclotomic> small_roots(const std::vector<Cyclotomic> &c)
{
    const std::size_t n = c.size() - 1;
    const Cyclotomic lead = c.back();
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {-(c[0] / lead)};
    }
    if (n == 2) {
        const Cyclotomic b = c[1] / lead;
        const Cyclotomic a0 = c[0] / lead;
        const auto s = cyclo_sqrt(b * b - Cyclotomic(4) * a0);
        if (!s) {
            fail(ErrorCode::NeedsExtension, "square root of " + (b * b - Cyclotomic(4) * a0).str());
        }
        const Cyclotomic half(Rational(1, 2));
        return {half * (-b + *s), half * (-b - *s)};
    }
    if (n == 4 && c[1].is_zero() && c[3].is_zero()) {
        std::vector<Cyclotomic> out;
        for (const auto &t : small_roots({c[0], c[2], c[4]})) {
            const auto s = cyclo_sqrt(t);
            if (!s) {
                fail(ErrorCode::NeedsExtension, "square root of " + t.str());
            }
            out.push_back(*s);
            out.push_back(-*s);
        }
        return out;
    }
    fail(ErrorCode::NeedsExtension, "degree " + std::to_string(n) + " factor without roots in the tower");
}

std::vector<FieldElem> constant_roots(const std::vector<FieldElem> &coeffs)
{
    std::vector<Cyclotomic> c;
    bool rational = true;
    for (const auto &x : coeffs) {
        c.push_back(x.constant_value());
        rational = rational && c.back().is_rational();
    }
    std::vector<FieldElem> out;
    if (rational) {
        std::vector<Rational> q;
        for (const auto &x : c) {
            q.push_back(x.rational());
        }
        std::vector<Rational> found;
        peel_rational_roots(q, found);
        for (const auto &r : found) {
            out.emplace_back(r);
        }
        c.clear();
        for (const auto &x : q) {
            c.emplace_back(x);
        }
    } else {
        while (c.size() > 1 && c[0].is_zero()) {
            out.emplace_back(0L);
            c.erase(c.begin());
        }
    }
    for (const auto &r : small_roots(c)) {
        out.emplace_back(r);
    }
    return out;
}

struct Eval {
    LaurentSeries value;
    LaurentSeries derivative;
};

Eval eval_with_derivative(const std::vector<LaurentSeries> &c, const LaurentSeries &z)
{
    LaurentSeries p = c.back();
    LaurentSeries dp;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

LaurentSeries newton(const std::vector<LaurentSeries> &c, LaurentSeries z, std::int64_t cap)
{
    for (int iter = 0; iter < 200; ++iter) {
        const auto [value, derivative] = eval_with_derivative(c, z);
        if (derivative.known_zero()) {
            fail(ErrorCode::TruncationInsufficient, "derivative unknown at an approximate root");
        }
        const LaurentSeries step = value * derivative.inverse(cap);
        z = z - step;
        if (step.known_zero()) {
            return z;
        }
    }
    fail(ErrorCode::TruncationInsufficient, "Newton iteration did not settle");
}

// Q(v^rho (y0 + z1)) as a polynomial in z1.
std::vector<LaurentSeries> taylor_shift(const std::vector<LaurentSeries> &c, const LaurentSeries &a,
                                        const LaurentSeries &b)
{
    std::vector<LaurentSeries> poly{c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        std::vector<LaurentSeries> next(poly.size() + 1);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t] * a;
            next[t + 1] += poly[t] * b;
        }
        next[0] += c[i];
        poly = std::move(next);
    }
    return poly;
}

bool uncertain(const LaurentSeries &c)
{
    return c.known_zero() && !c.is_exact();
}

void roots_rec(std::vector<LaurentSeries> c, std::int64_t cap, std::optional<std::int64_t> min_val,
               LaurentRoots &out, int depth)
{
    if (depth > 64) {
        fail(ErrorCode::TruncationInsufficient, "roots not separated");
    }
    std::size_t exact_zeros = 0;
    while (exact_zeros < c.size() && c[exact_zeros].known_zero() && c[exact_zeros].is_exact()) {
        ++exact_zeros;
    }
    if (exact_zeros == c.size()) {
        fail(ErrorCode::NotReduced, "zero polynomial");
    }
    if (exact_zeros >= 2) {
        fail(ErrorCode::NotReduced, "repeated root 0");
    }
    if (exact_zeros == 1) {
        out.roots.emplace_back();
        c.erase(c.begin());
    }
    std::vector<std::size_t> known;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].known_zero()) {
            known.push_back(i);
        }
    }
    if (known.empty()) {
        fail(ErrorCode::TruncationInsufficient, "no known coefficient");
    }
    const std::size_t i0 = known.front();
    if (i0 >= 2) {
        fail(ErrorCode::TruncationInsufficient, "several roots hidden by truncation");
    }
    auto val = [&](std::size_t i) { return *c[i].valuation(); };

    // Lower hull of the known points.
    std::vector<std::size_t> hull;
    for (std::size_t i : known) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull.back();
            // drop b when it lies on or above the segment a-i
            const Integer lhs = Integer(val(b) - val(a)) * Integer(static_cast<long>(i - a));
            const Integer rhs = Integer(val(i) - val(a)) * Integer(static_cast<long>(b - a));
            if (lhs >= rhs) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }

    // phi(rho) = min over known points of val_l + rho l; an uncertain point must
    // stay strictly above it or the edge is not determined.
    auto check_uncertain = [&](const Rational &rho, const Rational &phi) {
        for (std::size_t l = 0; l < c.size(); ++l) {
            if (uncertain(c[l]) && Rational(c[l].prec()) + rho * Rational(static_cast<long>(l)) <= phi) {
                fail(ErrorCode::TruncationInsufficient, "coefficient of z^" + std::to_string(l) +
                                                            " not known far enough to fix the Newton polygon");
            }
        }
    };

    if (i0 == 1) {
        // A root near 0 hidden by the uncertain constant coefficient.
        const Rational rho0(c[0].prec() - val(1));
        if (hull.size() >= 2) {
            const Rational rho(val(hull[0]) - val(hull[1]), static_cast<long>(hull[1] - hull[0]));
            if (rho0 <= rho) {
                fail(ErrorCode::TruncationInsufficient, "small root not separated");
            }
        }
        if (min_val && rho0 < Rational(static_cast<long>(*min_val))) {
            fail(ErrorCode::TruncationInsufficient, "small root valuation undetermined");
        }
        out.roots.push_back(newton(c, LaurentSeries(), cap));
    }

    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t i = hull[h];
        const std::size_t j = hull[h + 1];
        const long len = static_cast<long>(j - i);
        Rational rho(val(i) - val(j), len);
        rho.canonicalize();
        const Rational phi = Rational(val(i)) + rho * Rational(static_cast<long>(i));
        check_uncertain(rho, phi);
        if (min_val && rho < Rational(static_cast<long>(*min_val))) {
            continue;
        }
        if (rho.get_den() != 1) {
            out.complete = false;
            continue;
        }
        const std::int64_t r = rho.get_num().get_si();
        std::vector<FieldElem> chi(static_cast<std::size_t>(len) + 1);
        for (std::size_t l = i; l <= j; ++l) {
            if (!c[l].known_zero() && Rational(val(l)) + rho * Rational(static_cast<long>(l)) == phi) {
                chi[l - i] = c[l].coeff(val(l));
            }
        }
        std::vector<FieldElem> ys = tower_roots(chi);
        std::vector<std::pair<FieldElem, int>> distinct;
        for (const auto &y : ys) {
            auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto &d) { return d.first == y; });
            if (it == distinct.end()) {
                distinct.emplace_back(y, 1);
            } else {
                ++it->second;
            }
        }
        for (const auto &[y0, mult] : distinct) {
            const LaurentSeries lead = LaurentSeries::monomial(y0, r);
            if (mult == 1) {
                out.roots.push_back(newton(c, lead, cap));
                continue;
            }
            LaurentRoots sub;
            roots_rec(taylor_shift(c, lead, LaurentSeries::monomial(FieldElem(1L), r)), cap, 1, sub, depth + 1);
            out.complete = out.complete && sub.complete;
            for (const auto &z1 : sub.roots) {
                out.roots.push_back(lead + z1.shifted(r));
            }
        }
    }
}

} // namespace

std::optional<Cyclotomic> cyclo_sqrt(const Cyclotomic &a)
{
    if (a.is_rational()) {
        return tower_sqrt(a);
    }
    for (int m = 2; m <= Cyclotomic::max_order; ++m) {
        for (long j = 1; j < m; ++j) {
            const Cyclotomic t = a * Cyclotomic::zeta(m, m - j);
            if (!t.is_rational()) {
                continue;
            }
            const auto s = tower_sqrt(t);
            if (!s) {
                return std::nullopt;
            }
            Cyclotomic half;
            if (j % 2 == 0) {
                half = Cyclotomic::zeta(m, j / 2);
            } else if (2 * m <= Cyclotomic::max_order) {
                half = Cyclotomic::zeta(2 * m, j);
            } else {
                return std::nullopt;
            }
            return *s * half;
        }
    }
    return std::nullopt;
}

std::vector<FieldElem> tower_roots(const std::vector<FieldElem> &coeffs)
{
    std::vector<FieldElem> c = coeffs;
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
    }
    if (c.empty()) {
        fail(ErrorCode::InvalidParams, "zero polynomial");
    }
    std::vector<FieldElem> out;
    while (c.size() > 1 && c[0].is_zero()) {
        out.emplace_back(0L);
        c.erase(c.begin());
    }
    const FieldElem lead = c.back();
    for (auto &x : c) {
        x = x / lead;
    }
    const bool constant = std::all_of(c.begin(), c.end(), [](const FieldElem &x) { return x.is_constant(); });
    if (constant) {
        for (auto &r : constant_roots(c)) {
            out.push_back(std::move(r));
        }
        return out;
    }
    const std::size_t n = c.size() - 1;
    if (n == 1) {
        out.push_back(-c[0]);
        return out;
    }
    if (n == 2) {
        const FieldElem disc = c[1] * c[1] - FieldElem(4L) * c[0];
        const FieldElem half(Rational(1, 2));
        if (disc.is_zero()) {
            out.push_back(-half * c[1]);
            out.push_back(-half * c[1]);
            return out;
        }
        if (disc.is_constant()) {
            if (const auto s = cyclo_sqrt(disc.constant_value())) {
                out.push_back(half * (-c[1] + FieldElem(*s)));
                out.push_back(half * (-c[1] - FieldElem(*s)));
                return out;
            }
        }
    }
    fail(ErrorCode::NeedsExtension, "roots of a polynomial with parameter-dependent coefficients");
}

LaurentSeries eval_poly(const std::vector<LaurentSeries> &coeffs, const LaurentSeries &z)
{
    return horner(coeffs, z);
}

LaurentRoots laurent_roots(const std::vector<LaurentSeries> &coeffs, std::int64_t cap,
                           std::optional<std::int64_t> min_val)
{
    if (coeffs.empty()) {
        fail(ErrorCode::InvalidParams, "empty polynomial");
    }
    LaurentRoots out;
    roots_rec(coeffs, cap, min_val, out, 0);
    return out;
}

} // namespace fsplit
