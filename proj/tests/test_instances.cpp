#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/instances.hpp>
#include <fsplit/splitting.hpp>

#include "generators.hpp"

using namespace fsplit;

using fsplit_test::same_roots;
using fsplit_test::substitute_all;

TEST_CASE("reduce_frame")
{
    // w^{1/2} x in frame (4, 1) -> frame (2, 0)
    const auto b = PuiseuxSeries::from_pairs(1, 1, 4, 1, 12, {{ExpPair{{1}, {Rational(1, 2)}}, FieldElem(1L)}});
    const auto red = reduce_frame(b);
    CHECK(red.p() == 2);
    CHECK(red.q() == 0);
    CHECK(red.terms() == b.terms());
    // x^2 / w needs q = 1
    const auto c = PuiseuxSeries::from_pairs(1, 1, 2, 2, 30, {{ExpPair{{2}, {Rational(-1)}}, FieldElem(1L)}});
    const auto red2 = reduce_frame(c);
    CHECK(red2.p() == 1);
    CHECK(red2.q() == 1);
    CHECK(red2.terms() == c.terms());
}

TEST_CASE("presets")
{
    const auto w = preset("whitney");
    const auto f = w.poly();
    REQUIRE(f.coeffs().size() == 1);
    CHECK(f.coeffs()[0].p() == 1);
    CHECK(f.coeffs()[0].terms().size() == 1);
    CHECK(f.coeffs()[0].coeff(ExpPair{{2}, {Rational(1)}}) == FieldElem(-1L));
    CHECK(f.coeffs()[0].trunc() == 8);
    const auto res = split(f, 4, 1);
    CHECK(res.status == SplitStatus::Split);
    CHECK(res.p == 2);
    REQUIRE(!res.diagnostics.empty());
    CHECK(res.diagnostics.front().find("NonSplitEvidence") != std::string::npos);
    CHECK(same_roots(res.root_system->roots, w.roots()));

    const auto nc = preset("nc3");
    CHECK(nc.poly().coeffs()[1].terms().size() == 2);
    CHECK(split(nc.poly(), 2, 0).status == SplitStatus::Split);
    CHECK(split(preset("qpole").poly(), 2, 1).q == 1);
    CHECK(split(preset("mu3").poly(), 3, 0).p == 3);

    CHECK_THROWS_AS(preset("nope"), Error);
    CHECK(preset_names().size() == 4);
}

TEST_CASE("instance validation")
{
    Instance bad = preset("nc3");
    bad.payload.pop_back();
    CHECK_THROWS_AS(bad.validate(), Error);
    Instance cst = preset("whitney");
    cst.payload[0] += PuiseuxSeries::constant(1, 1, FieldElem(1L));
    CHECK_THROWS_AS(cst.validate(), Error);
    CHECK_THROWS_AS(random_instance(RandomSpec{1}, 1), Error);
}

TEST_CASE("random instances are deterministic with distinct linear parts")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomSpec spec{3, 1, static_cast<int>(seed % 2), static_cast<int>(1 + seed % 3), 0, 8, 3};
        const auto a = random_instance(spec, seed);
        const auto b = random_instance(spec, seed);
        CHECK(a.payload == b.payload);
        const auto f = a.poly();
        for (const auto &c : f.coeffs()) {
            // mu_p orbits keep f integral in w
            CHECK(c.p() == 1);
        }
    }
}

TEST_CASE("split roundtrip on random instances")
{
    int checked = 0;
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const int k = 2 + static_cast<int>(seed % 2);
        const int p = 1 + static_cast<int>((seed / 2) % 3);
        const int q = static_cast<int>((seed / 6) % 2);
        const RandomSpec spec{k, 1, 0, p > k ? 1 : p, q, 8, 3};
        const auto inst = random_instance(spec, seed);
        const auto f = inst.poly();
        const auto res = split(f, 3, 1);
        INFO("seed " << seed << " k " << k << " p " << spec.p << " q " << q);
        REQUIRE(res.status == SplitStatus::Split);
        CHECK(res.p == spec.p);
        CHECK(res.q <= q);
        CHECK(same_roots(res.root_system->roots, inst.roots()));
        CHECK(product_matches(f, res.root_system->roots));

        const auto perm = mu_p_action(*res.root_system);
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            CHECK(sorted[i] == static_cast<int>(i));
        }
        bool ramified_visible = false;
        for (const auto &b : res.root_system->roots) {
            for (const auto &[e, c] : b.terms()) {
                ramified_visible = ramified_visible || e.beta[0].get_den() != 1;
            }
        }
        if (ramified_visible) {
            CHECK(perm != sorted);
        }
        if (res.p > 1) {
            // the linear parts all vanish at w = 0
            for (const auto &row : res.root_system->bij) {
                for (const auto &b : row) {
                    CHECK(b.coeff(0).is_zero());
                }
            }
        }
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("proxy instances")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int k = 2 + static_cast<int>(seed % 3);
        const auto t = random_proxy_true(k, 0, 8, seed).poly();
        const auto pt = atw_proxy(t);
        CHECK(pt.lowest_is_xz);
        CHECK(pt.lowest_nc);
        CHECK(is_nc(t).nc);
        const auto res = split(t, 1, 0);
        REQUIRE(res.status == SplitStatus::Split);
        for (int d : res.root_system->d()) {
            CHECK(d == 0);
        }
        const auto fi = random_proxy_false(k, 0, 8, seed);
        INFO(*fi.label << " seed " << seed);
        const auto pf = atw_proxy(fi.poly());
        CHECK(!(pf.lowest_is_xz && pf.lowest_nc));
    }
}

TEST_CASE("nc is invariant under linear changes of x")
{
    Rng rng(7);
    for (const std::string name : {"nc3", "whitney"}) {
        const auto f = preset(name).poly();
        const bool base = is_nc(f).nc;
        const int m = f.num_x();
        int done = 0;
        while (done < 50) {
            std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(m));
            for (auto &row : a) {
                for (auto &x : row) {
                    x = Rational(rng.range(-3, 3));
                }
            }
            const bool invertible = m == 1 ? a[0][0] != 0 : a[0][0] * a[1][1] - a[0][1] * a[1][0] != 0;
            if (!invertible) {
                continue;
            }
            std::map<int, PuiseuxSeries> sub;
            for (int i = 0; i < m; ++i) {
                PuiseuxSeries s(1, m, 1, 0, f.trunc());
                for (int j = 0; j < m; ++j) {
                    s += PuiseuxSeries::x(1, m, j, f.trunc()).scaled(FieldElem(a[i][j]));
                }
                sub.emplace(i, s);
            }
            CHECK(is_nc(substitute_all(f, sub)).nc == base);
            ++done;
        }
    }
}

TEST_CASE("seeds separated only at v^1 and roots colliding along a direction")
{
    // linear parts (1/2 + 3w, -1/2) and (1/2 - 3w, -1/2)
    const auto close = random_instance(RandomSpec{3, 1, 0, 1, 1, 8, 3}, 13);
    const auto res = split(close.poly(), 3, 1);
    REQUIRE(res.status == SplitStatus::Split);
    CHECK(same_roots(res.root_system->roots, close.roots()));

    // rational linear parts meeting along (1, 1), u-dependent beyond
    const auto f = random_proxy_true(3, 1, 8, 31).poly();
    const auto r2 = split(f, 1, 0);
    REQUIRE(r2.status == SplitStatus::Split);
    CHECK(product_matches(f, r2.root_system->roots));
}
