#include <fsplit/errors.hpp>
#include <fsplit/transforms.hpp>

#include <algorithm>

namespace fsplit
{

namespace
{

// Rewrites a_i term by term: beta <- shift(i, alpha, beta). The truncation
// is kept when f has order k; otherwise it drops by the largest possible
// decrease of internal degree, p * i * scale.
WeierstrassPoly transform_terms(const WeierstrassPoly &f, int scale,
                                const std::function<void(int, const ExpPair &, std::vector<Rational> &)> &shift,
                                const std::string &what)
{
    const bool keep = assert_form(f).order_k;
    return f.map_coeffs([&](int i, const PuiseuxSeries &a) {
        const int n = keep ? a.trunc() : std::max(0, a.trunc() - a.p() * i * scale);
        std::vector<std::pair<ExpPair, FieldElem>> terms;
        for (auto [e, c] : a.terms()) {
            shift(i, e, e.beta);
            const int na = e.alpha_total();
            for (const auto &b : e.beta) {
                if (b < -a.q() * na) {
                    fail(ErrorCode::NotOrderK, what + " leaves a pole in a_" + std::to_string(i));
                }
            }
            terms.emplace_back(std::move(e), c);
        }
        return PuiseuxSeries::from_pairs(a.r(), a.num_x(), a.p(), a.q(), n, terms);
    });
}

} // namespace

WeierstrassPoly blowup_chart(const WeierstrassPoly &f, int j)
{
    if (j < 0 || j >= f.r()) {
        fail(ErrorCode::IndexOutOfRange, "w index " + std::to_string(j));
    }
    return transform_terms(
        f, 1,
        [j](int i, const ExpPair &e, std::vector<Rational> &beta) {
            beta[static_cast<std::size_t>(j)] += e.alpha_total() - i;
        },
        "blow-up");
}

WeierstrassPoly blowup_origin(const WeierstrassPoly &f, int j)
{
    if (j < 0 || j >= f.r()) {
        fail(ErrorCode::IndexOutOfRange, "w index " + std::to_string(j));
    }
    if (f.r() > 1) {
        for (const auto &a : f.coeffs()) {
            if (a.q() != 0) {
                fail(ErrorCode::InvalidParams, "origin blow-up with several w needs q = 0");
            }
        }
    }
    return transform_terms(
        f, 1,
        [j](int i, const ExpPair &e, std::vector<Rational> &beta) {
            Rational others = 0;
            for (std::size_t l = 0; l < beta.size(); ++l) {
                if (static_cast<int>(l) != j) {
                    others += beta[l];
                }
            }
            beta[static_cast<std::size_t>(j)] += others + e.alpha_total() - i;
        },
        "origin blow-up");
}

WeierstrassPoly ramify(const WeierstrassPoly &f, int p)
{
    if (p < 1) {
        fail(ErrorCode::InvalidParams, "ramification index " + std::to_string(p));
    }
    return f.map_coeffs([p](int, const PuiseuxSeries &a) { return a.reframed(a.p() * p, a.q()); });
}

WeierstrassPoly rescale_q(const WeierstrassPoly &f, int q)
{
    if (f.r() != 1) {
        fail(ErrorCode::MultipleWVariables, "rescale needs a single w variable");
    }
    if (q < 0) {
        fail(ErrorCode::InvalidParams, "negative q");
    }
    if (q == 0) {
        return f;
    }
    return transform_terms(
        f, q,
        [q](int i, const ExpPair &e, std::vector<Rational> &beta) { beta[0] += q * (e.alpha_total() - i); },
        "rescale");
}

std::string to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::blowup_wj:
        return "blowup_wj";
    case StepKind::blowup_origin:
        return "blowup_origin";
    case StepKind::ramify:
        return "ramify";
    case StepKind::rescale:
        return "rescale";
    }
    return "?";
}

StepKind parse_step_kind(const std::string &s)
{
    for (auto k : {StepKind::blowup_wj, StepKind::blowup_origin, StepKind::ramify, StepKind::rescale}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    fail(ErrorCode::ParseError, "unknown step kind '" + s + "'");
}

WeierstrassPoly apply_step(const WeierstrassPoly &f, const TransformStep &step)
{
    switch (step.kind) {
    case StepKind::blowup_wj:
        return blowup_chart(f, step.param);
    case StepKind::blowup_origin:
        return blowup_origin(f, step.param);
    case StepKind::ramify:
        return ramify(f, step.param);
    case StepKind::rescale:
        return rescale_q(f, step.param);
    }
    fail(ErrorCode::InvalidParams, "unknown step");
}

TransformLog::TransformLog(int r) : exceptional_(static_cast<std::size_t>(r)) {}

void TransformLog::new_divisor(int j)
{
    exceptional_.at(static_cast<std::size_t>(j)) = "E" + std::to_string(++count_);
}

WeierstrassPoly TransformLog::apply(const WeierstrassPoly &f, const TransformStep &step)
{
    WeierstrassPoly g = apply_step(f, step);
    steps_.push_back(step);
    if (step.kind == StepKind::blowup_wj || step.kind == StepKind::blowup_origin) {
        new_divisor(step.param);
    } else if (step.kind == StepKind::rescale) {
        for (int i = 0; i < step.param; ++i) {
            new_divisor(0);
        }
    }
    return g;
}

WeierstrassPoly replay(const TransformLog &log, const WeierstrassPoly &f0)
{
    WeierstrassPoly f = f0;
    for (const auto &step : log.steps()) {
        f = apply_step(f, step);
    }
    return f;
}

} // namespace fsplit
