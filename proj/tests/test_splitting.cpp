#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/newton.hpp>
#include <fsplit/splitting.hpp>

#include "test_util.hpp"

using namespace fsplit;

namespace
{

PuiseuxSeries mono(int m, std::vector<int> alpha, Rational beta, Rational c, int p = 1, int q = 0, int n = 8)
{
    return PuiseuxSeries::from_pairs(1, m, p, q, n, {{ExpPair{std::move(alpha), {beta}}, FieldElem(c)}});
}

LaurentSeries ls(long c, std::int64_t e = 0)
{
    return LaurentSeries::monomial(FieldElem(c), e);
}

ErrorCode code_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidParams;
}

// z^2 - w x^2
WeierstrassPoly whitney(int n = 8)
{
    return WeierstrassPoly(2, {mono(1, {2}, 1, -1, 1, 0, n)});
}

// z^2 - x^2 w^2 - x^3 w
WeierstrassPoly qpole(int n = 8)
{
    return WeierstrassPoly(2, {mono(1, {2}, 2, -1, 1, 0, n) + mono(1, {3}, 1, -1, 1, 0, n)});
}

// (z + x1)(z + x2)(z - x1 - x2)
WeierstrassPoly nc3(int n = 8)
{
    const auto a2 = mono(2, {2, 0}, 0, -1, 1, 0, n) + mono(2, {1, 1}, 0, -1, 1, 0, n) + mono(2, {0, 2}, 0, -1, 1, 0, n);
    const auto a3 = mono(2, {2, 1}, 0, -1, 1, 0, n) + mono(2, {1, 2}, 0, -1, 1, 0, n);
    return WeierstrassPoly(3, {a2, a3});
}

Form lin(std::vector<long> c)
{
    std::vector<LaurentSeries> v;
    for (long x : c) {
        v.push_back(ls(x));
    }
    return Form::linear(v);
}

std::vector<Form> xz(const WeierstrassPoly &f)
{
    return lowest_homogeneous_part(f).xz_forms(f.k(), f.num_x());
}

} // namespace

TEST_CASE("tower and Laurent roots")
{
    // y^2 - 1, y^2 + 3, y^3 - 1
    CHECK(tower_roots({FieldElem(-1L), FieldElem(0L), FieldElem(1L)}).size() == 2);
    const auto r3 = tower_roots({FieldElem(3L), FieldElem(0L), FieldElem(1L)});
    REQUIRE(r3.size() == 2);
    CHECK(r3[0] * r3[0] == FieldElem(-3L));
    const auto cube = tower_roots({FieldElem(-1L), FieldElem(0L), FieldElem(0L), FieldElem(1L)});
    REQUIRE(cube.size() == 3);
    for (const auto &y : cube) {
        CHECK(y * y * y == FieldElem(1L));
    }
    CHECK(code_of([] { tower_roots({FieldElem(-7L), FieldElem(0L), FieldElem(1L)}); }) == ErrorCode::NeedsExtension);
    CHECK(tower_roots({FieldElem(-2L), FieldElem(0L), FieldElem(1L)}).size() == 2);
    const auto i4 = Cyclotomic::zeta(4);
    const auto s = cyclo_sqrt(i4);
    REQUIRE(s);
    CHECK(*s * *s == i4);

    // z^2 - (1 + v) known mod v^6
    const auto c0 = (ls(-1) + ls(-1, 1)).truncated(6);
    const auto roots = laurent_roots({c0, LaurentSeries(), ls(1)}, 40);
    REQUIRE(roots.roots.size() == 2);
    for (const auto &z : roots.roots) {
        const auto sq = z * z;
        CHECK(agree(sq, ls(1) + ls(1, 1)));
        CHECK(z.prec() == 6);
    }
    // z^2 - v has no roots in K((v))
    const auto ram = laurent_roots({ls(-1, 1), LaurentSeries(), ls(1)}, 40);
    CHECK(ram.roots.empty());
    CHECK_FALSE(ram.complete);
    // (z - 1)^2 (z + 1) exactly: repeated root
    CHECK(code_of([] { laurent_roots({ls(1), ls(-1), ls(-1), ls(1)}, 40); }) == ErrorCode::NotReduced);
    // the same with inexact data cannot be separated
    CHECK(code_of([] { laurent_roots({ls(1).truncated(5), ls(-1), ls(-1), ls(1)}, 40); }) ==
          ErrorCode::TruncationInsufficient);
    // (z - v)(z - v - v^2): residues collide, resolved one level down
    const auto close = laurent_roots({ls(1, 2) + ls(1, 3), ls(-2, 1) - ls(1, 2), ls(1)}, 40);
    REQUIRE(close.roots.size() == 2);
    CHECK(close.complete);
}

TEST_CASE("lowest_homogeneous_part examples")
{
    const auto at0 = lowest_homogeneous_part(whitney());
    CHECK(at0.degree == 2);
    CHECK(at0.xz_pure);
    CHECK(at0.terms.size() == 1);

    const auto at1 = lowest_homogeneous_part(whitney(), Point{{Rational(1)}, {}});
    CHECK(at1.degree == 2);
    CHECK(at1.terms.size() == 2);
    CHECK(at1.xz_pure);

    const auto low3 = lowest_homogeneous_part(nc3());
    CHECK(low3.degree == 3);
    CHECK(low3.terms.size() == 6);
}

TEST_CASE("factor_linear_forms examples")
{
    // z^2 - x1^2
    const WeierstrassPoly nc2(2, {mono(1, {2}, 0, -1)});
    const auto f2 = factor_linear_forms(xz(nc2));
    REQUIRE(f2.size() == 2);
    CHECK(((f2[0] == lin({1}) && f2[1] == lin({-1})) || (f2[0] == lin({-1}) && f2[1] == lin({1}))));

    const auto f3 = factor_linear_forms(xz(nc3()));
    REQUIRE(f3.size() == 3);
    int hits = 0;
    for (const auto &l : f3) {
        hits += (l == lin({1, 0})) + (l == lin({0, 1})) + (l == lin({-1, -1}));
    }
    CHECK(hits == 3);

    const WeierstrassPoly two(2, {mono(1, {2}, 0, -7)});
    CHECK(code_of([&] { factor_linear_forms(xz(two)); }) == ErrorCode::NeedsExtension);

    // z^2 - x1^2 - x2^2 is irreducible over the tower reals but splits with i
    const WeierstrassPoly sq(2, {mono(2, {2, 0}, 0, -1) + mono(2, {0, 2}, 0, -1)}, 1, 2);
    CHECK(code_of([&] { factor_linear_forms(xz(sq)); }) == ErrorCode::NotAProductOfLinearForms);

    // z^2 exactly: repeated factor
    const WeierstrassPoly dbl(2, {mono(1, {2}, 1, -1)});
    CHECK(code_of([&] { factor_linear_forms(xz(dbl)); }) == ErrorCode::NotReduced);
}

TEST_CASE("lift_roots examples")
{
    const WeierstrassPoly nc2(2, {mono(1, {2}, 0, -1)});
    const auto rs = lift_roots(nc2, {lin({1}), lin({-1})}, 1, 0, 8);
    REQUIRE(rs.roots.size() == 2);
    CHECK(product_matches(nc2, rs.roots));
    CHECK(equal_mod_trunc(rs.roots[0], mono(1, {1}, 0, -1)));
    CHECK(equal_mod_trunc(rs.roots[1], mono(1, {1}, 0, 1)));

    // z^2 - x1^2 (1 + w)
    const WeierstrassPoly unit(2, {mono(1, {2}, 0, -1) + mono(1, {2}, 1, -1)});
    const auto c0 = (ls(-1) + ls(-1, 1)).truncated(7);
    auto sroots = laurent_roots({c0, LaurentSeries(), ls(1)}, 40).roots;
    REQUIRE(sroots.size() == 2);
    const auto rs2 = lift_roots(unit, {Form::linear({sroots[0]}), Form::linear({sroots[1]})}, 1, 0, 8);
    CHECK(product_matches(unit, rs2.roots));
    const auto b = rs2.roots[0];
    CHECK(equal_mod_trunc(b * b, -unit.a(2)));
    CHECK(b.coeff(ExpPair{{1}, {Rational(3)}}).is_zero() == false);

    // z^2 - w x1^2 after ramify(2): seeds +-v x1
    const WeierstrassPoly ram(2, {mono(1, {2}, 1, -1, 2)});
    const auto rs3 = lift_roots(ram, {Form::linear({ls(1, 1)}), Form::linear({ls(-1, 1)})}, 2, 0, 8);
    CHECK(product_matches(ram, rs3.roots));
    CHECK(rs3.roots[0].terms().size() == 1);

    CHECK(code_of([&] { lift_roots(nc2, {lin({1}), lin({1})}, 1, 0, 8); }) == ErrorCode::SeedsNotDistinct);
    // seed of no root
    const WeierstrassPoly cubic(2, {mono(2, {2, 0}, 0, -1) + mono(2, {0, 3}, 0, -1)}, 1, 2);
    CHECK(code_of([&] { lift_roots(cubic, {lin({1, 0}), lin({-1, 0})}, 1, 0, 8); }) == ErrorCode::NotDivisible);
}

TEST_CASE("split examples")
{
    const WeierstrassPoly nc2(2, {mono(1, {2}, 0, -1)});
    const auto r1 = split(nc2, 3, 2);
    CHECK(r1.status == SplitStatus::Split);
    CHECK(r1.p == 1);
    CHECK(r1.q == 0);

    const auto r2 = split(whitney(), 3, 2);
    REQUIRE(r2.status == SplitStatus::Split);
    CHECK(r2.p == 2);
    CHECK(r2.q == 0);
    CHECK(r2.diagnostics.front().find("NonSplitEvidence") != std::string::npos);
    CHECK(r2.diagnostics.front().find("ramified") != std::string::npos);
    const auto &roots = r2.root_system->roots;
    CHECK(equal_mod_trunc(roots[0], mono(1, {1}, Rational(1, 2), -1, 2)));
    CHECK(equal_mod_trunc(roots[1], mono(1, {1}, Rational(1, 2), 1, 2)));

    const auto r3 = split(qpole(), 3, 2);
    REQUIRE(r3.status == SplitStatus::Split);
    CHECK(r3.p == 1);
    CHECK(r3.q == 1);
    bool found = false;
    for (const auto &b : r3.root_system->roots) {
        if (b.coeff(ExpPair{{1}, {Rational(1)}}) == FieldElem(1L)) {
            found = true;
            CHECK(b.coeff(ExpPair{{2}, {Rational(0)}}) == FieldElem(Rational(1, 2)));
            CHECK(b.coeff(ExpPair{{3}, {Rational(-1)}}) == FieldElem(Rational(-1, 8)));
        }
    }
    CHECK(found);
    const auto r3b = split(qpole(), 3, 0);
    CHECK(r3b.status == SplitStatus::NonSplitEvidence);

    const auto r4 = split(nc3(), 1, 0);
    CHECK(r4.status == SplitStatus::Split);

    const WeierstrassPoly two(2, {mono(1, {2}, 0, -7)});
    CHECK(split(two, 2, 1).status == SplitStatus::NeedsExtension);

    const WeierstrassPoly low(2, {mono(1, {1}, 0, 1)});
    CHECK(code_of([&] { split(low, 1, 0); }) == ErrorCode::NotOrderK);
}

TEST_CASE("is_nc examples")
{
    const WeierstrassPoly nc2(2, {mono(1, {2}, 0, -1)});
    CHECK(is_nc(nc2).nc);
    CHECK_FALSE(is_nc(whitney()).nc);
    CHECK(is_nc(whitney(), Point{{Rational(1)}, {}}).nc);
    CHECK(is_nc(nc3()).nc);
    // roots x1, 2 x1, -3 x1: distinct but with dependent rows
    const auto dep = from_roots({mono(2, {1, 0}, 0, 1), mono(2, {1, 0}, 0, 2)}).first;
    const auto res = is_nc(dep);
    CHECK_FALSE(res.nc);
    CHECK(res.reason.find("dependent") != std::string::npos);
}

TEST_CASE("mu_p_action examples")
{
    const auto r1 = split(WeierstrassPoly(2, {mono(1, {2}, 0, -1)}), 1, 0);
    CHECK(mu_p_action(*r1.root_system) == std::vector<int>{0, 1});

    const auto r2 = split(whitney(), 2, 0);
    CHECK(mu_p_action(*r2.root_system) == std::vector<int>{1, 0});

    // z^3 + w x1^3
    const WeierstrassPoly mu3(3, {PuiseuxSeries(1, 1, 1, 0, 8), mono(1, {3}, 1, 1)}, 1, 1);
    const auto r3 = split(mu3, 3, 0);
    REQUIRE(r3.status == SplitStatus::Split);
    CHECK(r3.p == 3);
    const auto perm = mu_p_action(*r3.root_system);
    CHECK(perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(perm[0])])] == 0);
    CHECK(perm[0] != 0);

    RootSystem broken = *r2.root_system;
    broken.roots[1] = broken.roots[0];
    CHECK(code_of([&] { mu_p_action(broken); }) == ErrorCode::NotClosedUnderAction);
}

TEST_CASE("atw_proxy examples")
{
    const WeierstrassPoly unit(2, {mono(1, {2}, 0, -1) + mono(1, {2}, 1, -1)});
    const auto a = atw_proxy(unit);
    CHECK(a.order == 2);
    CHECK(a.lowest_is_xz);
    CHECK(a.lowest_nc);

    const auto b = atw_proxy(whitney());
    CHECK(b.order == 2);
    CHECK(b.lowest_is_xz);
    CHECK_FALSE(b.lowest_nc);

    const auto c = atw_proxy(qpole());
    CHECK(c.order == 2);
    CHECK(c.lowest_is_xz);
    CHECK_FALSE(c.lowest_nc);

    CHECK(atw_proxy(nc3()).lowest_nc);
}
