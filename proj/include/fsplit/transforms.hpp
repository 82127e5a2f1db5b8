#ifndef FSPLIT_TRANSFORMS_HPP
#define FSPLIT_TRANSFORMS_HPP

#include <string>
#include <vector>

#include <fsplit/weierstrass.hpp>

namespace fsplit
{

// w_j-chart of the blow-up with centre {z = x = w_j = 0}:
// a_i <- w_j^{-i} a_i(w, u, w_j x). Throws NotOrderK when a pole appears.
WeierstrassPoly blowup_chart(const WeierstrassPoly &f, int j);

// w_j-chart of the blow-up with centre {z = x = w = 0}; the other w_l are
// replaced by w_j w_l as well. For r = 1 it agrees with blowup_chart.
WeierstrassPoly blowup_origin(const WeierstrassPoly &f, int j = 0);

// Pass to w = v^p: multiplies every ramification denominator by p.
WeierstrassPoly ramify(const WeierstrassPoly &f, int p);

// x <- w^q x, z <- w^q z, divided by w^{qk}. Requires r = 1.
WeierstrassPoly rescale_q(const WeierstrassPoly &f, int q);

enum class StepKind { blowup_wj, blowup_origin, ramify, rescale };

std::string to_string(StepKind kind);
StepKind parse_step_kind(const std::string &s);

struct TransformStep {
    StepKind kind;
    // j for blow-ups, p for ramify, q for rescale.
    int param;

    friend bool operator==(const TransformStep &, const TransformStep &) = default;
};

class TransformLog
{
public:
    explicit TransformLog(int r = 1);

    const std::vector<TransformStep> &steps() const noexcept
    {
        return steps_;
    }
    // Label of the exceptional divisor {w_j = 0}, empty if none.
    const std::vector<std::string> &exceptional() const noexcept
    {
        return exceptional_;
    }

    // Applies the step to f and records it.
    WeierstrassPoly apply(const WeierstrassPoly &f, const TransformStep &step);

    friend bool operator==(const TransformLog &, const TransformLog &) = default;

private:
    void new_divisor(int j);

    std::vector<TransformStep> steps_;
    std::vector<std::string> exceptional_;
    int count_ = 0;
};

WeierstrassPoly apply_step(const WeierstrassPoly &f, const TransformStep &step);

// Re-applies every step of log to f0.
WeierstrassPoly replay(const TransformLog &log, const WeierstrassPoly &f0);

} // namespace fsplit

#endif
