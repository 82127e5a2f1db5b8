#include <fsplit/errors.hpp>
#include <fsplit/instances.hpp>
#include <fsplit/splitting.hpp>

#include <algorithm>
#include <numeric>

namespace fsplit
{

namespace
{

PuiseuxSeries with_trunc(const PuiseuxSeries &b, int p, int q, int n)
{
    const PuiseuxSeries f = b.reframed(p, q);
    return PuiseuxSeries::from_internal(f.r(), f.num_x(), p, q, n, f.internal_terms());
}

// c * x^alpha * prod w_j^{e_j / p}
PuiseuxSeries term(int r, int m, int p, int q, int n, const std::vector<int> &alpha, const std::vector<int> &e,
                   const FieldElem &c)
{
    const int na = std::accumulate(alpha.begin(), alpha.end(), 0);
    PuiseuxSeries::Exps key;
    for (int j = 0; j < r; ++j) {
        key.push_back(e[static_cast<std::size_t>(j)] + p * q * na);
    }
    key.insert(key.end(), alpha.begin(), alpha.end());
    if (PuiseuxSeries::internal_degree(key) > n) {
        return PuiseuxSeries(r, m, p, q, n);
    }
    return PuiseuxSeries::from_internal(r, m, p, q, n, {{key, c}});
}

std::vector<int> random_alpha(Rng &rng, int m, int d)
{
    std::vector<int> alpha(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < d; ++i) {
        alpha[static_cast<std::size_t>(rng.range(0, m - 1))] += 1;
    }
    return alpha;
}

FieldElem random_coeff(Rng &rng, int s)
{
    FieldElem c(rng.nonzero_rational(4, 2));
    if (s > 0 && rng.coin()) {
        c *= FieldElem(1L) + FieldElem::u(static_cast<std::size_t>(rng.range(0, s - 1)));
    }
    return c;
}

// Linear part of a root as its |alpha| = 1 terms.
PuiseuxSeries::TermMap linear_terms(const PuiseuxSeries &b)
{
    PuiseuxSeries::TermMap out;
    for (const auto &[e, c] : b.internal_terms()) {
        int na = 0;
        for (std::size_t i = static_cast<std::size_t>(b.r()); i < e.size(); ++i) {
            na += e[i];
        }
        if (na == 1) {
            out.emplace(e, c);
        }
    }
    return out;
}

bool distinct_linear_parts(const std::vector<PuiseuxSeries> &roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (linear_terms(roots[i]) == linear_terms(roots[j])) {
                return false;
            }
        }
    }
    return true;
}

void check_spec(const RandomSpec &spec)
{
    if (spec.k < 2 || spec.k > 6 || spec.r < 1 || spec.r > 2 || spec.s < 0 || spec.s > 2 || spec.p < 1 ||
        spec.p > 6 || spec.q < 0 || spec.q > 3 || spec.trunc < spec.k || spec.degree < 1) {
        fail(ErrorCode::InvalidParams, "random instance parameters out of range");
    }
}

// Root with integral w-exponents when integral is set.
PuiseuxSeries free_root(Rng &rng, const RandomSpec &spec, int n, bool integral)
{
    const int m = spec.k - 1;
    const int p = spec.p;
    PuiseuxSeries b(spec.r, m, p, spec.q, n);
    const std::vector<int> zero(static_cast<std::size_t>(spec.r), 0);
    for (int j = 0; j < m; ++j) {
        std::vector<int> alpha(static_cast<std::size_t>(m), 0);
        alpha[static_cast<std::size_t>(j)] = 1;
        b += term(spec.r, m, p, spec.q, n, alpha, zero, FieldElem(rng.nonzero_rational(4, 2)));
        if (rng.range(0, 3) == 0) {
            std::vector<int> e = zero;
            e[static_cast<std::size_t>(rng.range(0, spec.r - 1))] = p;
            b += term(spec.r, m, p, spec.q, n, alpha, e, FieldElem(rng.nonzero_rational(4, 2)));
        }
    }
    const int extra = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < extra && spec.degree >= 2; ++t) {
        const int d = static_cast<int>(rng.range(2, spec.degree));
        std::vector<int> e;
        for (int j = 0; j < spec.r; ++j) {
            const long lo = -static_cast<long>(spec.q) * d;
            e.push_back(integral ? static_cast<int>(rng.range(lo, 2) * p) : static_cast<int>(rng.range(lo * p, 2 * p)));
        }
        b += term(spec.r, m, p, spec.q, n, random_alpha(rng, m, d), e, random_coeff(rng, spec.s));
    }
    return b;
}

// Orbit generator for r = 1: linear part in w^{1/p}; terms with exponent
// numerator divisible by p only when allow_integral.
PuiseuxSeries orbit_root(Rng &rng, const RandomSpec &spec, int n, bool allow_integral)
{
    const int m = spec.k - 1;
    const int p = spec.p;
    PuiseuxSeries b(1, m, p, spec.q, n);
    for (int j = 0; j < m; ++j) {
        std::vector<int> alpha(static_cast<std::size_t>(m), 0);
        alpha[static_cast<std::size_t>(j)] = 1;
        b += term(1, m, p, spec.q, n, alpha, {1}, FieldElem(rng.nonzero_rational(4, 2)));
    }
    const int extra = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < extra && spec.degree >= 2; ++t) {
        const int d = static_cast<int>(rng.range(2, spec.degree));
        int e = 0;
        do {
            e = static_cast<int>(rng.range(-static_cast<long>(p) * spec.q * d, 2L * p));
        } while (!allow_integral && e % p == 0);
        b += term(1, m, p, spec.q, n, random_alpha(rng, m, d), {e}, random_coeff(rng, spec.s));
    }
    return b;
}

} // namespace

PuiseuxSeries reduce_frame(const PuiseuxSeries &s)
{
    int p2 = 1;
    int q2 = 0;
    const auto terms = s.terms();
    for (const auto &[e, c] : terms) {
        const int na = e.alpha_total();
        for (const auto &b : e.beta) {
            p2 = std::lcm(p2, static_cast<int>(b.get_den().get_si()));
            if (b < 0) {
                // smallest q with b >= -q |alpha|
                Rational need = -b / na;
                Integer ceil_q = need.get_num() / need.get_den();
                if (Rational(ceil_q) < need) {
                    ceil_q += 1;
                }
                q2 = std::max(q2, static_cast<int>(ceil_q.get_si()));
            }
        }
    }
    const int t = s.p() / p2;
    const int spread = 1 + s.r() * s.p() * (s.q() - q2);
    const int n = s.trunc() / std::max(t, spread);
    return PuiseuxSeries::from_pairs(s.r(), s.num_x(), p2, q2, n, terms);
}

void Instance::validate() const
{
    if (k < 2 || trunc < k || r < 1 || s < 0 || p < 1 || q < 0) {
        fail(ErrorCode::InvalidParams, "instance needs k >= 2, trunc >= k, r >= 1, p >= 1, q, s >= 0");
    }
    if (static_cast<int>(payload.size()) != k - 1) {
        fail(ErrorCode::InvalidParams, "payload must hold k - 1 series");
    }
    for (const auto &b : payload) {
        if (b.r() != r || b.num_x() != payload.front().num_x()) {
            fail(ErrorCode::DimensionMismatch, "payload series over different variables");
        }
        if (p % b.p() != 0 || b.q() > q) {
            fail(ErrorCode::InvalidParams, "payload frame exceeds the instance frame (p, q)");
        }
        if (mode == InstanceMode::roots) {
            const PuiseuxSeries::Exps zero(static_cast<std::size_t>(r + b.num_x()), 0);
            if (b.internal_terms().count(zero) != 0) {
                fail(ErrorCode::NonzeroConstantTerm, "root with a constant term");
            }
        }
    }
}

std::vector<PuiseuxSeries> Instance::roots() const
{
    if (mode != InstanceMode::roots) {
        fail(ErrorCode::InvalidParams, "instance has no roots");
    }
    std::vector<PuiseuxSeries> out;
    PuiseuxSeries sum(r, payload.front().num_x(), p, q, trunc);
    for (const auto &b : payload) {
        out.push_back(with_trunc(b, p, q, trunc));
        sum += out.back();
    }
    out.push_back(-sum);
    return out;
}

WeierstrassPoly Instance::poly() const
{
    validate();
    const int m = payload.front().num_x();
    std::vector<PuiseuxSeries> a;
    if (mode == InstanceMode::coeffs) {
        for (const auto &c : payload) {
            a.push_back(c.truncated(std::min(c.trunc(), trunc)));
        }
        return WeierstrassPoly(k, std::move(a), r, m, s);
    }
    // Roots are polynomials: expand at a truncation large enough to survive
    // the frame reduction.
    const int big = trunc * std::max(p, 1 + r * p * q);
    std::vector<PuiseuxSeries> wide;
    for (const auto &b : payload) {
        wide.push_back(with_trunc(b, p, q, big));
    }
    const auto expanded = from_roots(wide, s).first;
    for (const auto &c : expanded.coeffs()) {
        const PuiseuxSeries red = reduce_frame(c);
        a.push_back(red.truncated(std::min(red.trunc(), trunc)));
    }
    return WeierstrassPoly(k, std::move(a), r, m, s);
}

std::vector<std::string> preset_names()
{
    return {"whitney", "nc3", "qpole", "mu3"};
}

Instance preset(const std::string &name, int trunc)
{
    Instance inst;
    inst.trunc = trunc;
    inst.label = name;
    auto mono = [&](int m, std::vector<int> alpha, Rational beta, Rational c, int p) {
        return PuiseuxSeries::from_pairs(1, m, p, 0, trunc, {{ExpPair{std::move(alpha), {beta}}, FieldElem(c)}});
    };
    if (name == "whitney") {
        inst.k = 2;
        inst.p = 2;
        inst.mode = InstanceMode::roots;
        inst.payload = {mono(1, {1}, Rational(1, 2), 1, 2)};
    } else if (name == "nc3") {
        inst.k = 3;
        inst.mode = InstanceMode::roots;
        inst.payload = {mono(2, {1, 0}, 0, 1, 1), mono(2, {0, 1}, 0, 1, 1)};
    } else if (name == "qpole") {
        inst.k = 2;
        inst.mode = InstanceMode::coeffs;
        inst.payload = {mono(1, {2}, 2, -1, 1) + mono(1, {3}, 1, -1, 1)};
    } else if (name == "mu3") {
        inst.k = 3;
        inst.mode = InstanceMode::coeffs;
        inst.payload = {PuiseuxSeries(1, 2, 1, 0, trunc), mono(2, {3, 0}, 1, 1, 1)};
    } else {
        fail(ErrorCode::InvalidParams, "unknown preset '" + name + "'");
    }
    return inst;
}

Instance random_instance(const RandomSpec &spec, std::uint64_t seed)
{
    check_spec(spec);
    Rng rng(seed);
    Instance inst;
    inst.k = spec.k;
    inst.r = spec.r;
    inst.s = spec.s;
    inst.p = spec.p;
    inst.q = spec.q;
    inst.trunc = spec.trunc;
    inst.mode = InstanceMode::roots;
    inst.seed = seed;
    const int n = spec.trunc;
    const bool galois = spec.r == 1 && spec.p > 1 && spec.p <= spec.k;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<PuiseuxSeries> roots;
        if (!galois) {
            for (int i = 0; i + 1 < spec.k; ++i) {
                roots.push_back(free_root(rng, spec, n, false));
            }
        } else {
            const int orbits = spec.k / spec.p;
            const int rest = spec.k - orbits * spec.p;
            for (int o = 0; o < orbits; ++o) {
                const PuiseuxSeries b = orbit_root(rng, spec, n, rest > 0);
                for (int i = 0; i < spec.p; ++i) {
                    roots.push_back(act_zeta(b, i));
                }
            }
            for (int i = 0; i + 1 < rest; ++i) {
                roots.push_back(free_root(rng, spec, n, true));
            }
            if (rest == 0) {
                roots.pop_back();
            }
        }
        inst.payload = roots;
        if (distinct_linear_parts(inst.roots())) {
            return inst;
        }
    }
    fail(ErrorCode::InvalidParams, "could not draw distinct linear parts");
}

namespace
{

std::vector<std::vector<Rational>> random_rows(Rng &rng, int k, bool want_nc)
{
    const int m = k - 1;
    for (;;) {
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(k),
                                                std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
        for (int i = 0; i + 1 < k; ++i) {
            for (int j = 0; j < m; ++j) {
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(rng.range(-3, 3));
                rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)] -=
                    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        std::vector<std::vector<FieldElem>> fe;
        bool distinct = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<FieldElem> r;
            for (const auto &x : rows[i]) {
                r.emplace_back(x);
            }
            fe.push_back(std::move(r));
            for (std::size_t j = 0; j < i; ++j) {
                distinct = distinct && rows[i] != rows[j];
            }
        }
        if (distinct && row_deleted_minors_nonzero(fe) == want_nc) {
            return rows;
        }
    }
}

// Roots with constant linear parts given by rows (the last row is implied)
// plus higher terms of (w, x)-degree >= 2.
Instance rows_instance(Rng &rng, int k, int s, int trunc, const std::vector<std::vector<Rational>> &rows,
                       int w_shift)
{
    const int m = k - 1;
    Instance inst;
    inst.k = k;
    inst.s = s;
    inst.trunc = trunc;
    inst.mode = InstanceMode::roots;
    for (int i = 0; i + 1 < k; ++i) {
        PuiseuxSeries b(1, m, 1, 0, trunc);
        for (int j = 0; j < m; ++j) {
            const Rational &c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != 0) {
                std::vector<int> alpha(static_cast<std::size_t>(m), 0);
                alpha[static_cast<std::size_t>(j)] = 1;
                b += term(1, m, 1, 0, trunc, alpha, {w_shift}, FieldElem(c));
            }
        }
        const int extra = static_cast<int>(rng.range(1, 3));
        for (int t = 0; t < extra; ++t) {
            const int d = static_cast<int>(rng.range(1, 3));
            const int beta = static_cast<int>(rng.range(d == 1 ? 1 + w_shift : 0, 2 + w_shift));
            b += term(1, m, 1, 0, trunc, random_alpha(rng, m, d), {beta}, random_coeff(rng, s));
        }
        inst.payload.push_back(b);
    }
    return inst;
}

} // namespace

Instance random_proxy_true(int k, int s, int trunc, std::uint64_t seed)
{
    if (k < 2 || k > 6 || s < 0 || s > 2 || trunc < k) {
        fail(ErrorCode::InvalidParams, "proxy instance parameters out of range");
    }
    Rng rng(seed);
    Instance inst = rows_instance(rng, k, s, trunc, random_rows(rng, k, true), 0);
    inst.seed = seed;
    inst.label = "proxy-true";
    return inst;
}

Instance random_proxy_false(int k, int s, int trunc, std::uint64_t seed)
{
    if (k < 2 || k > 6 || s < 0 || s > 2 || trunc < k) {
        fail(ErrorCode::InvalidParams, "proxy instance parameters out of range");
    }
    Rng rng(seed);
    Instance inst;
    switch (seed % 4) {
    case 0: {
        // mu_p orbits, p = k
        RandomSpec spec{k, 1, s, std::min(k, 3), 0, trunc, 3};
        inst = random_instance(spec, seed);
        inst.label = "proxy-false: ramified";
        break;
    }
    case 1:
        // linear parts divisible by w
        inst = rows_instance(rng, k, s, trunc, random_rows(rng, k, true), 1);
        inst.label = "proxy-false: w-divisible linear parts";
        break;
    case 2:
        if (k >= 3) {
            inst = rows_instance(rng, k, s, trunc, random_rows(rng, k, false), 0);
            inst.label = "proxy-false: dependent linear parts";
            break;
        }
        [[fallthrough]];
    default: {
        // z^2-type pole family: (c w x1)^2 + e w x1^3 + ..., embedded for k > 2
        // as (z - l)(z + l) with l = c w x1 + e x1^2 / (2c) - e^2 x1^3 / (8 c^3 w) ...
        // expressed through the coefficient a_2 directly when k = 2.
        if (k == 2) {
            const Rational c = Rational(rng.range(1, 3));
            const Rational e = rng.nonzero_rational(3, 2);
            inst.k = 2;
            inst.s = s;
            inst.trunc = trunc;
            inst.mode = InstanceMode::coeffs;
            auto mono = [&](std::vector<int> alpha, int beta, Rational coef) {
                return PuiseuxSeries::from_pairs(1, 1, 1, 0, trunc,
                                                 {{ExpPair{std::move(alpha), {Rational(beta)}}, FieldElem(coef)}});
            };
            inst.payload = {mono({2}, 2, -c * c) + mono({3}, 1, -e) + mono({4}, static_cast<int>(rng.range(0, 2)),
                                                                       rng.rational(3, 2))};
            inst.label = "proxy-false: pole family";
        } else {
            inst = rows_instance(rng, k, s, trunc, random_rows(rng, k, true), 1);
            inst.label = "proxy-false: w-divisible linear parts";
        }
        break;
    }
    }
    inst.seed = seed;
    return inst;
}

} // namespace fsplit
