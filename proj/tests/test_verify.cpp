#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/instances.hpp>
#include <fsplit/verify.hpp>

#include <chrono>

#include "test_util.hpp"

using namespace fsplit;

namespace
{

PuiseuxSeries mono(int m, std::vector<int> alpha, Rational beta, Rational c, int p = 1, int q = 0, int n = 8)
{
    return PuiseuxSeries::from_pairs(1, m, p, q, n, {{ExpPair{std::move(alpha), {beta}}, FieldElem(c)}});
}

// z^2 - x^2 (1 + w)
WeierstrassPoly unit_family()
{
    return WeierstrassPoly(2, {mono(1, {2}, 0, -1) + mono(1, {2}, 1, -1)});
}

bool check(const LemmaReport &r, const std::string &name)
{
    for (const auto &[n, ok] : r.checks) {
        if (n == name) {
            return ok;
        }
    }
    FAIL("no check " << name);
    return false;
}

Point at_w(Rational w)
{
    return Point{{w}, {}};
}

} // namespace

TEST_CASE("negpower")
{
    const auto w = split(preset("whitney").poly(), 3, 1);
    auto r = verify_negpower(*w.root_system, preset("whitney").poly());
    CHECK(r.hypothesis == Hypothesis::satisfied);
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(r.notes.back() == "d = (1,1) over p = 2");

    const auto [f2, rs2] = from_roots({mono(1, {1}, 0, 1)});
    r = verify_negpower(rs2, f2);
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(r.notes.back() == "d = (0,0) over p = 1");

    // roots +-x/v: sigma_2 = -x^2/w
    const auto [f3, rs3] = from_roots({mono(1, {1}, Rational(-1, 2), 1, 2, 1, 8)});
    r = verify_negpower(rs3, f3);
    CHECK(r.hypothesis == Hypothesis::violated);
    CHECK(r.conclusion == Conclusion::vacuous);
    CHECK(check(r, "order iff roots of order >= 1"));
    CHECK(!check(r, "d_i >= 0"));
}

TEST_CASE("homog")
{
    const auto nc = preset("nc3").poly();
    auto r = verify_homog(nc, *split(nc, 1, 0).root_system);
    CHECK(r.hypothesis == Hypothesis::satisfied);
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(check(r, "(1) row-deleted minors invertible"));
    CHECK(check(r, "(2) lowest part is nc(k)"));
    CHECK(check(r, "(3) d_i = 0"));

    const auto w = preset("whitney").poly();
    r = verify_homog(w, *split(w, 2, 0).root_system);
    CHECK(r.hypothesis == Hypothesis::violated);
    CHECK(r.conclusion == Conclusion::vacuous);

    // roots (x1 + w x2, x2, -x1 - x2 - w x2)
    const auto [f, rs] = from_roots({mono(2, {1, 0}, 0, 1) + mono(2, {0, 1}, 1, 1), mono(2, {0, 1}, 0, 1)});
    r = verify_homog(f, rs);
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(check(r, "lowest part factors match b_ij(0, 0)"));
}

TEST_CASE("p1")
{
    auto r = verify_p1(unit_family());
    CHECK(r.hypothesis == Hypothesis::satisfied);
    CHECK(r.conclusion == Conclusion::holds);

    r = verify_p1(preset("whitney").poly());
    CHECK(r.hypothesis == Hypothesis::violated);
    CHECK(r.conclusion == Conclusion::vacuous);
    CHECK(check(r, "mu_p acts nontrivially"));
    CHECK(check(r, "rows collide at w = 0"));

    r = verify_p1(preset("mu3").poly());
    CHECK(r.hypothesis == Hypothesis::violated);
    CHECK(check(r, "mu_p acts nontrivially"));
    CHECK(check(r, "rows collide at w = 0"));

    r = verify_p1(preset("whitney").poly(), at_w(1));
    CHECK(r.hypothesis == Hypothesis::satisfied);
    CHECK(r.conclusion == Conclusion::holds);
}

TEST_CASE("q0")
{
    auto r = verify_q0(preset("nc3").poly());
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(check(r, "support-minimum claim"));
    CHECK(check(r, "pole decomposition"));

    r = verify_q0(preset("qpole").poly());
    CHECK(r.hypothesis == Hypothesis::violated);
    CHECK(r.conclusion == Conclusion::vacuous);
    CHECK(!check(r, "no negative w-powers"));

    r = verify_q0(unit_family());
    CHECK(r.conclusion == Conclusion::holds);

    // u in the linear parts puts the factorizer outside the tower
    const auto u = FieldElem::u(0);
    const auto b1 = mono(2, {1, 0}, 0, 1) + mono(2, {0, 1}, 0, 1).scaled(u);
    const auto [f, rs] = from_roots({b1, mono(2, {0, 1}, 0, 1)}, 1);
    r = verify_q0(f);
    CHECK(r.hypothesis == Hypothesis::untestable);
    CHECK(r.conclusion == Conclusion::vacuous);
}

TEST_CASE("sigma identity")
{
    const auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 6; ++k) {
        for (int h = 1; h < k; ++h) {
            const auto r = verify_sigma_identity(k, h);
            INFO("k " << k << " h " << h);
            CHECK(r.conclusion == Conclusion::holds);
            CHECK(r.checks.size() == 4);
        }
    }
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
    CHECK(verify_sigma_identity(3, 2).notes.front() == "gamma_2 = x2");
    CHECK(verify_sigma_identity(4, 2).notes.front() == "gamma_2 = x3^2");
    CHECK(verify_sigma_identity(4, 1).notes.front() == "gamma_1 = x2*x3^2");
    CHECK(verify_sigma_identity(2, 1).notes.front() == "gamma_1 = x1");
    CHECK_THROWS_AS(verify_sigma_identity(3, 3), Error);
}

TEST_CASE("clopen")
{
    auto r = verify_clopen(unit_family(), {at_w(0), at_w(1), at_w(Rational(-1, 2))});
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(r.notes[1] == "not nc at: -");

    r = verify_clopen(preset("whitney").poly(), {at_w(0), at_w(1), at_w(4)});
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(r.notes[0] == "nc at: w1=1; w1=4");
    CHECK(r.notes[2] == "proxy false at: w1=0");

    r = verify_clopen(preset("nc3").poly(), {at_w(0), at_w(1), at_w(2), at_w(-1), at_w(Rational(1, 3))});
    CHECK(r.conclusion == Conclusion::holds);
    CHECK(r.notes[2] == "proxy false at: -");
}

TEST_CASE("lemma suite on random instances")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int k = 2 + static_cast<int>(seed % 2);
        const int s = static_cast<int>(seed % 3 == 0);
        INFO("seed " << seed << " k " << k);
        const auto f = random_proxy_true(k, s, 8, seed).poly();
        const auto res = split(f, 3, 1);
        REQUIRE(res.status == SplitStatus::Split);
        for (const auto &r : {verify_negpower(*res.root_system, f), verify_homog(f, *res.root_system),
                              verify_p1(f), verify_q0(f)}) {
            INFO(r.lemma);
            CHECK(r.hypothesis == Hypothesis::satisfied);
            CHECK(r.conclusion == Conclusion::holds);
        }
        const auto g = random_proxy_false(k, s, 8, seed).poly();
        const auto resg = split(g, 3, 1);
        std::vector<LemmaReport> reports = {verify_p1(g), verify_q0(g)};
        if (resg.status == SplitStatus::Split) {
            reports.push_back(verify_negpower(*resg.root_system, g));
            reports.push_back(verify_homog(g, *resg.root_system));
        }
        for (const auto &r : reports) {
            INFO(r.lemma);
            CHECK(!(r.hypothesis == Hypothesis::satisfied && r.conclusion == Conclusion::fails));
        }
    }
}
