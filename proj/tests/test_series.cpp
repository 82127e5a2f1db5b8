#include <doctest.h>

#include <fsplit/errors.hpp>
#include <fsplit/forms.hpp>
#include <fsplit/series.hpp>

#include "generators.hpp"

using namespace fsplit;

namespace
{

struct T {
    std::vector<int> alpha;
    std::vector<long> beta_num; // over p
    Rational c;
};

PuiseuxSeries ser(int r, int m, int p, int q, int n, const std::vector<T> &terms)
{
    std::vector<std::pair<ExpPair, FieldElem>> pairs;
    for (const auto &t : terms) {
        ExpPair e{t.alpha, {}};
        for (long b : t.beta_num) {
            e.beta.push_back(make_rational(b, p));
        }
        pairs.emplace_back(e, FieldElem(t.c));
    }
    return PuiseuxSeries::from_pairs(r, m, p, q, n, pairs);
}

ExpPair ep(std::vector<int> alpha, std::vector<Rational> beta)
{
    return ExpPair{std::move(alpha), std::move(beta)};
}

} // namespace

using fsplit_test::random_series;

TEST_CASE("series arithmetic examples")
{
    const auto x1 = PuiseuxSeries::x(1, 1, 0, 6);
    CHECK(x1 + x1 == x1.scaled(FieldElem(2)));

    const auto root = ser(1, 1, 2, 0, 6, {{{1}, {1}, 1}});
    const auto sq = root * root;
    CHECK(equal_mod_trunc(sq, ser(1, 1, 1, 0, 6, {{{2}, {1}, 1}})));
    CHECK(sq.terms().size() == 1);
    CHECK(sq.terms()[0].first == ep({2}, {Rational(1)}));

    const auto one_plus_w = ser(1, 1, 1, 0, 3, {{{0}, {0}, 1}, {{0}, {1}, 1}});
    const auto geom = ser(1, 1, 1, 0, 3, {{{0}, {0}, 1}, {{0}, {1}, -1}, {{0}, {2}, 1}, {{0}, {3}, -1}});
    CHECK(one_plus_w * geom == PuiseuxSeries::constant(1, 1, FieldElem(1), 3));
}

TEST_CASE("pole bound is enforced at construction")
{
    CHECK_THROWS_AS(ser(1, 1, 1, 0, 4, {{{1}, {-1}, 1}}), Error);
    CHECK_NOTHROW(ser(1, 1, 1, 1, 4, {{{1}, {-1}, 1}}));
    CHECK_THROWS_AS(ser(1, 1, 1, 1, 4, {{{1}, {-2}, 1}}), Error);
    // beta = 1/2 is not over p = 1
    std::vector<std::pair<ExpPair, FieldElem>> bad{{ep({1}, {make_rational(1, 2)}), FieldElem(1)}};
    CHECK_THROWS_AS(PuiseuxSeries::from_pairs(1, 1, 1, 0, 4, bad), Error);
}

TEST_CASE("substitute examples")
{
    const auto f = ser(1, 1, 1, 0, 6, {{{2}, {0}, 1}});
    const auto wx = ser(1, 1, 1, 0, 6, {{{1}, {1}, 1}});
    const auto g = substitute(f, {{0, wx}});
    CHECK(equal_mod_trunc(g, ser(1, 1, 1, 0, 6, {{{2}, {2}, 1}})));

    // 1/(1+x) to N = 3, then x -> x + x^2, against 1/(1+x+x^2) = 1 - x + x^3 - x^4 + ...
    const auto inv = ser(1, 1, 1, 0, 3, {{{0}, {0}, 1}, {{1}, {0}, 1}}).invert_unit();
    const auto s = ser(1, 1, 1, 0, 3, {{{1}, {0}, 1}, {{2}, {0}, 1}});
    const auto composed = substitute(inv, {{0, s}});
    CHECK(composed == ser(1, 1, 1, 0, 3, {{{0}, {0}, 1}, {{1}, {0}, -1}, {{3}, {0}, 1}}));

    CHECK_THROWS_AS(substitute(f, {{0, PuiseuxSeries::constant(1, 1, FieldElem(1), 6)}}), Error);
    CHECK_THROWS_AS(substitute(f, {{0, PuiseuxSeries::x(1, 2, 0, 6)}}), Error);
}

TEST_CASE("valuation examples")
{
    const auto f = ser(1, 1, 1, 0, 6, {{{2}, {1}, 1}, {{3}, {0}, 1}});
    CHECK(f.valuation(Grading::x_only) == Rational(2));
    CHECK(f.valuation(Grading::xz_total) == Rational(3));
    CHECK(!PuiseuxSeries(1, 1).valuation(Grading::x_only).has_value());
    // x^2/w with q = 1: internal exponent a = -1 + 2 = 1, degree 1 + 2.
    const auto g = ser(1, 1, 1, 1, 6, {{{2}, {-1}, 1}});
    CHECK(g.internal_terms().begin()->first == PuiseuxSeries::Exps{1, 2});
    CHECK(g.valuation(Grading::internal) == Rational(3));
    CHECK(g.valuation(Grading::xz_total) == Rational(1));
}

TEST_CASE("compare_support examples")
{
    const auto e1 = ep({1, 0}, {Rational(0)});
    const auto e2 = ep({0, 1}, {Rational(0)});
    CHECK(compare_support(e1, ep({2, 0}, {Rational(-1)})) < 0);
    CHECK(compare_support(e1, e1) == 0);
    // Tuple-lex tie-break: (0,1) precedes (1,0).
    CHECK(compare_support(e2, e1) < 0);
    CHECK_THROWS_AS(compare_support(e1, ep({1}, {Rational(0)})), Error);
}

TEST_CASE("support_min examples")
{
    CHECK(ser(1, 1, 1, 0, 6, {{{1}, {0}, 1}, {{2}, {1}, 1}}).support_min() == ep({1}, {Rational(0)}));
    const auto b = ser(1, 1, 1, 1, 8, {{{1}, {1}, 1}, {{2}, {0}, make_rational(1, 2)}, {{3}, {-1}, make_rational(-1, 8)}});
    CHECK(b.support_min() == ep({1}, {Rational(1)}));
    CHECK(ser(1, 1, 1, 1, 6, {{{2}, {-1}, 1}}).support_min() == ep({2}, {Rational(-1)}));
    CHECK_THROWS_AS(PuiseuxSeries(1, 1).support_min(), Error);
}

TEST_CASE("invert_unit examples")
{
    const auto f = ser(1, 1, 1, 0, 5, {{{0}, {0}, 1}, {{0}, {1}, 1}});
    const auto g = f.invert_unit();
    CHECK(f * g == PuiseuxSeries::constant(1, 1, FieldElem(1), 5));
    CHECK(g.coeff(ep({0}, {Rational(5)})) == FieldElem(-1));
    CHECK(PuiseuxSeries::constant(1, 1, FieldElem(2), 4).invert_unit() ==
          PuiseuxSeries::constant(1, 1, FieldElem(make_rational(1, 2)), 4));
    CHECK_THROWS_AS(PuiseuxSeries::x(1, 1, 0, 4).invert_unit(), Error);
}

TEST_CASE("exact_divide_form examples")
{
    const LaurentSeries one(FieldElem(1));
    const LaurentSeries m1(FieldElem(-1));
    auto form2 = [](LaurentSeries a, LaurentSeries b, LaurentSeries c) {
        return Form::from_terms(2, 2, {{{2, 0}, a}, {{1, 1}, b}, {{0, 2}, c}});
    };
    const Form y0_minus_y1 = Form::linear({one, m1});
    const Form q = exact_divide_form(form2(one, LaurentSeries(), m1), y0_minus_y1);
    CHECK(q == Form::linear({one, one}));
    CHECK_THROWS_AS(exact_divide_form(form2(one, LaurentSeries(), one), y0_minus_y1), Error);

    // (v^2 y0^2 - y1^2) / (v y0 - y1) = v y0 + y1
    const LaurentSeries v = LaurentSeries::monomial(FieldElem(1), 1);
    const LaurentSeries v2 = LaurentSeries::monomial(FieldElem(1), 2);
    const Form q2 = exact_divide_form(form2(v2, LaurentSeries(), m1), Form::linear({v, m1}));
    CHECK(q2 == Form::linear({v, one}));
    CHECK(q2 * Form::linear({v, m1}) == form2(v2, LaurentSeries(), m1));
}

TEST_CASE("exact_divide_form tracks precision")
{
    fsplit_test::Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        auto rnd = [&](std::int64_t lo) {
            LaurentSeries::TermMap t;
            for (int i = 0; i < 3; ++i) {
                t[rng.range(lo, lo + 4)] = FieldElem(rng.nonzero_rational());
            }
            return LaurentSeries::from_terms(t, LaurentSeries::exact);
        };
        const Form a = Form::linear({rnd(0), rnd(-1), rnd(1)});
        const Form b = Form::linear({rnd(0), rnd(0), rnd(-2)}) * Form::linear({rnd(1), rnd(0), rnd(0)});
        const Form prod = (a * b).truncated(12);
        const Form q = exact_divide_form(prod, a, 40);
        CHECK(agree(q, b));
        CHECK(q.prec() > 0);
    }
}

TEST_CASE("x_forms roundtrip")
{
    const auto b = ser(1, 2, 1, 1, 8, {{{1, 0}, {1}, 1}, {{2, 0}, {0}, make_rational(1, 2)}, {{1, 2}, {-3}, 3}});
    const auto forms = x_forms(b, 1, 8);
    CHECK(forms[1].coeff({1, 0}) == LaurentSeries::monomial(FieldElem(1), 1, forms[1].prec()));
    const auto back = from_x_forms(forms, 1, 1, 8);
    CHECK(equal_mod_trunc(back, b));
    // A v^{-2} coefficient in degree 1 violates q = 1.
    std::vector<Form> bad(2, Form(2, 0));
    bad[1] = Form::linear({LaurentSeries::monomial(FieldElem(1), -2), LaurentSeries()});
    CHECK_THROWS_AS(from_x_forms(bad, 1, 1, 4), Error);

    fsplit_test::Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const int p = static_cast<int>(rng.range(1, 2));
        const int q = static_cast<int>(rng.range(0, 1));
        const auto s = random_series(rng, 1, 2, p, q, 6, static_cast<int>(rng.range(1, 6)));
        const auto fs = x_forms(s, p, 6);
        CHECK(equal_mod_trunc(from_x_forms(fs, p, q, 6), s));
    }
}

TEST_CASE("ring axioms modulo truncation (500 triples)")
{
    fsplit_test::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = trial % 5 == 0 ? 2 : 1;
        auto draw = [&]() {
            return random_series(rng, r, 2, static_cast<int>(rng.range(1, 2)), static_cast<int>(rng.range(0, 1)),
                                 static_cast<int>(rng.range(2, 6)), static_cast<int>(rng.range(0, 4)));
        };
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        REQUIRE(equal_mod_trunc((a + b) + c, a + (b + c)));
        REQUIRE(equal_mod_trunc(a + b, b + a));
        REQUIRE(equal_mod_trunc((a * b) * c, a * (b * c)));
        REQUIRE(equal_mod_trunc(a * b, b * a));
        REQUIRE(equal_mod_trunc(a * (b + c), a * b + a * c));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("internal valuation is additive")
{
    fsplit_test::Rng rng(12);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int p = static_cast<int>(rng.range(1, 3));
        const int q = static_cast<int>(rng.range(0, 1));
        const auto f = random_series(rng, 1, 2, p, q, 8, 3);
        const auto g = random_series(rng, 1, 2, p, q, 8, 3);
        if (f.is_zero() || g.is_zero()) {
            continue;
        }
        const Rational vf = *f.valuation(Grading::internal);
        const Rational vg = *g.valuation(Grading::internal);
        if (vf + vg > 8) {
            continue;
        }
        CHECK(*(f * g).valuation(Grading::internal) == vf + vg);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("substitute is a ring homomorphism and truncation-sound (200 cases)")
{
    fsplit_test::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int qf = static_cast<int>(rng.range(0, 1));
        const int pf = static_cast<int>(rng.range(1, 2));
        const int n = static_cast<int>(rng.range(3, 6));
        const auto f = random_series(rng, 1, 2, pf, qf, n + 3, 4);
        const auto g = random_series(rng, 1, 2, pf, qf, n + 3, 4);
        std::map<int, PuiseuxSeries> big;
        std::map<int, PuiseuxSeries> small;
        for (int i = 0; i < 2; ++i) {
            if (rng.coin()) {
                const auto s = random_series(rng, 1, 2, static_cast<int>(rng.range(1, 2)),
                                             static_cast<int>(rng.range(0, 1)), n + 3, 3, qf > 0, 1);
                big.emplace(i, s);
                small.emplace(i, s.truncated(n));
            }
        }
        const auto sf = substitute(f.truncated(n), small);
        const auto sg = substitute(g.truncated(n), small);
        REQUIRE(equal_mod_trunc(substitute((f * g).truncated(n), small), sf * sg));
        REQUIRE(equal_mod_trunc(substitute((f + g).truncated(n), small), sf + sg));
        REQUIRE(equal_mod_trunc(substitute(f, big), sf));
    }
}

TEST_CASE("compare_support is a total order (1000 pairs)")
{
    fsplit_test::Rng rng(14);
    auto draw = [&]() {
        ExpPair e;
        e.alpha = {static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3))};
        e.beta = {make_rational(rng.range(-4, 4), rng.range(1, 2))};
        return e;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        const auto ab = compare_support(a, b);
        const auto ba = compare_support(b, a);
        CHECK((ab < 0) == (ba > 0));
        CHECK((ab == 0) == (a == b));
        if (ab < 0 && compare_support(b, c) < 0) {
            CHECK(compare_support(a, c) < 0);
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_series(rng, 1, 2, 2, 1, 6, 5);
        if (s.is_zero()) {
            continue;
        }
        const auto m = s.support_min();
        int minima = 0;
        for (const auto &[e, c] : s.terms()) {
            CHECK(compare_support(m, e) <= 0);
            minima += compare_support(m, e) == 0 ? 1 : 0;
        }
        CHECK(minima == 1);
        CHECK(s.terms().front().first == m);
    }
}

TEST_CASE("supports of p = 1, q = 0 series are >= (0, 0)")
{
    fsplit_test::Rng rng(15);
    const ExpPair origin = ep({0, 0}, {Rational(0)});
    for (int trial = 0; trial < 200; ++trial) {
        for (const auto &[e, c] : random_series(rng, 1, 2, 1, 0, 6, 4).terms()) {
            CHECK(compare_support(origin, e) <= 0);
        }
    }
}
