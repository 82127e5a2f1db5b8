#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/weierstrass.hpp>

#include "test_util.hpp"

using namespace fsplit;

namespace
{

// Polynomials in z with series coefficients, index = power of z.
using ZPoly = std::vector<PuiseuxSeries>;

ZPoly zmul(const ZPoly &a, const ZPoly &b)
{
    ZPoly out(a.size() + b.size() - 1, PuiseuxSeries(a[0].r(), a[0].num_x(), 1, 0, a[0].trunc()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

ZPoly product_of_factors(const std::vector<PuiseuxSeries> &roots)
{
    const auto &b0 = roots.front();
    ZPoly acc{PuiseuxSeries::constant(b0.r(), b0.num_x(), FieldElem(1), b0.trunc())};
    for (const auto &b : roots) {
        acc = zmul(acc, {b, PuiseuxSeries::constant(b.r(), b.num_x(), FieldElem(1), b.trunc())});
    }
    return acc;
}

// Horner composition g(z + s).
ZPoly shift_poly(const ZPoly &g, const PuiseuxSeries &s)
{
    ZPoly acc{g.back()};
    const ZPoly lin{s, PuiseuxSeries::constant(s.r(), s.num_x(), FieldElem(1), s.trunc())};
    for (std::size_t i = g.size() - 1; i-- > 0;) {
        acc = zmul(acc, lin);
        acc[0] += g[i];
    }
    return acc;
}

PuiseuxSeries mono(int m, std::vector<int> alpha, Rational beta, Rational c, int p = 1, int n = 8)
{
    return PuiseuxSeries::from_pairs(1, m, p, 0, n, {{ExpPair{std::move(alpha), {beta}}, FieldElem(c)}});
}

PuiseuxSeries random_root(fsplit_test::Rng &rng, int m, int p, int n, bool allow_pure_w)
{
    PuiseuxSeries acc(1, m, p, 0, n);
    const int nterms = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> alpha(static_cast<std::size_t>(m), 0);
        int deg = static_cast<int>(rng.range(allow_pure_w ? 0 : 1, 3));
        for (int d = 0; d < deg; ++d) {
            alpha[static_cast<std::size_t>(rng.range(0, m - 1))] += 1;
        }
        Rational beta = make_rational(rng.range(deg == 0 ? 1 : 0, 2 * p), p);
        acc += mono(m, alpha, beta, rng.nonzero_rational(), p, n);
    }
    return acc;
}

} // namespace

TEST_CASE("tschirnhaus_normalize examples")
{
    const auto w = PuiseuxSeries::w(1, 1, 0, 6);
    const auto x = PuiseuxSeries::x(1, 1, 0, 6);
    auto [f, shift] = tschirnhaus_normalize({w.scaled(FieldElem(2)), x});
    CHECK(shift == w);
    CHECK(equal_mod_trunc(f.a(2), x - w * w));

    auto [g, s2] = tschirnhaus_normalize({x.scaled(FieldElem(3)), PuiseuxSeries(1, 1, 1, 0, 6), PuiseuxSeries(1, 1, 1, 0, 6)});
    CHECK(s2 == x);
    CHECK(equal_mod_trunc(g.a(2), (x * x).scaled(FieldElem(-3))));
    CHECK(equal_mod_trunc(g.a(3), (x * x * x).scaled(FieldElem(2))));

    const auto zero = PuiseuxSeries(1, 1, 1, 0, 6);
    auto [h, s3] = tschirnhaus_normalize({zero, (w * x).scaled(FieldElem(-1))});
    CHECK(s3.is_zero());
    CHECK(equal_mod_trunc(h.a(2), (w * x).scaled(FieldElem(-1))));
}

TEST_CASE("tschirnhaus_normalize inverts under the shift")
{
    fsplit_test::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = static_cast<int>(rng.range(2, 4));
        std::vector<PuiseuxSeries> c;
        for (int i = 0; i < k; ++i) {
            c.push_back(random_root(rng, 2, 1, 6, true));
        }
        auto [f, shift] = tschirnhaus_normalize(c);
        ZPoly g(static_cast<std::size_t>(k + 1), PuiseuxSeries(1, 2, 1, 0, 6));
        g[static_cast<std::size_t>(k)] = PuiseuxSeries::constant(1, 2, FieldElem(1), 6);
        for (int j = 2; j <= k; ++j) {
            g[static_cast<std::size_t>(k - j)] = f.a(j);
        }
        const ZPoly back = shift_poly(g, shift);
        for (int j = 1; j <= k; ++j) {
            CHECK(equal_mod_trunc(back[static_cast<std::size_t>(k - j)], c[static_cast<std::size_t>(j - 1)]));
        }
    }
}

TEST_CASE("from_roots examples")
{
    const auto x1 = PuiseuxSeries::x(1, 1, 0, 8);
    auto [f, rs] = from_roots({x1});
    CHECK(f.k() == 2);
    CHECK(equal_mod_trunc(f.a(2), -(x1 * x1)));
    CHECK(rs.roots.size() == 2);
    CHECK(rs.roots[1] == -x1);
    CHECK(rs.d() == std::vector<int>{0, 0});

    auto [g, rs2] = from_roots({mono(1, {1}, make_rational(1, 2), 1, 2)});
    CHECK(equal_mod_trunc(g.a(2), mono(1, {2}, 1, -1)));
    CHECK(rs2.p == 2);
    CHECK(rs2.d() == std::vector<int>{1, 1});

    const auto y1 = PuiseuxSeries::x(1, 2, 0, 8);
    const auto y2 = PuiseuxSeries::x(1, 2, 1, 8);
    auto [h, rs3] = from_roots({y1, y2});
    CHECK(h.k() == 3);
    CHECK(equal_mod_trunc(h.a(2), -(y1 * y1 + y1 * y2 + y2 * y2)));
    CHECK(equal_mod_trunc(h.a(3), -(y1 * y1 * y2 + y1 * y2 * y2)));
    CHECK(rs3.bij[2][0] == LaurentSeries(FieldElem(-1), rs3.bij[2][0].prec()));

    CHECK_THROWS_AS(from_roots({x1 + PuiseuxSeries::constant(1, 1, FieldElem(1), 8)}), Error);
}

TEST_CASE("elementary_symmetric examples")
{
    const auto y1 = PuiseuxSeries::x(1, 2, 0, 8);
    const auto y2 = PuiseuxSeries::x(1, 2, 1, 8);
    const std::vector<PuiseuxSeries> v{y1, y2, -(y1 + y2)};
    CHECK(elementary_symmetric(0, v) == PuiseuxSeries::constant(1, 2, FieldElem(1), 8));
    CHECK(equal_mod_trunc(elementary_symmetric(1, v), PuiseuxSeries(1, 2, 1, 0, 8)));
    CHECK(equal_mod_trunc(elementary_symmetric(2, v), -(y1 * y1 + y1 * y2 + y2 * y2)));
    CHECK(equal_mod_trunc(elementary_symmetric(3, v), -(y1 * y1 * y2 + y1 * y2 * y2)));
    CHECK_THROWS_AS(elementary_symmetric(4, v), Error);
    CHECK_THROWS_AS(elementary_symmetric(-1, v), Error);
}

TEST_CASE("assert_form examples")
{
    const auto x1 = PuiseuxSeries::x(1, 1, 0, 8);
    const auto w = PuiseuxSeries::w(1, 1, 0, 8);
    auto flags = assert_form(WeierstrassPoly(2, {-(w * x1 * x1)}));
    CHECK(flags.in_ideal);
    CHECK(flags.order_k);
    flags = assert_form(WeierstrassPoly(2, {-w}));
    CHECK(!flags.in_ideal);
    CHECK(!flags.order_k);
    flags = assert_form(WeierstrassPoly(3, {-x1, PuiseuxSeries(1, 1, 1, 0, 8)}, 1, 1));
    CHECK(flags.in_ideal);
    CHECK(!flags.order_k);
}

TEST_CASE("from_roots roundtrip against product of factors (200 instances)")
{
    fsplit_test::Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(rng.range(2, 4));
        const int p = static_cast<int>(rng.range(1, 3));
        const int n = static_cast<int>(rng.range(4, 8));
        std::vector<PuiseuxSeries> roots;
        for (int i = 0; i + 1 < k; ++i) {
            roots.push_back(random_root(rng, k - 1, p, n, false));
        }
        auto [f, rs] = from_roots(roots);
        const ZPoly prod = product_of_factors(rs.roots);
        REQUIRE(prod.size() == static_cast<std::size_t>(k + 1));
        CHECK(prod[static_cast<std::size_t>(k - 1)].is_zero());
        for (int j = 2; j <= k; ++j) {
            CHECK(equal_mod_trunc(prod[static_cast<std::size_t>(k - j)], f.a(j)));
        }
        for (const auto &b : rs.roots) {
            CHECK(f.evaluate(-b).is_zero());
        }
    }
}

TEST_CASE("order-k criterion matches root x-valuations")
{
    fsplit_test::Rng rng(23);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(rng.range(2, 3));
        std::vector<PuiseuxSeries> roots;
        for (int i = 0; i + 1 < k; ++i) {
            roots.push_back(random_root(rng, k - 1, 1, 12, rng.range(0, 3) == 0));
        }
        auto [f, rs] = from_roots(roots);
        bool roots_ok = true;
        for (const auto &b : rs.roots) {
            const auto v = b.valuation(Grading::x_only);
            roots_ok = roots_ok && (!v || *v >= 1);
        }
        violations += roots_ok ? 0 : 1;
        CHECK(assert_form(f).order_k == roots_ok);
    }
    CHECK(violations > 20);
}
