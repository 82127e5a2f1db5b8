#ifndef FSPLIT_VERIFY_HPP
#define FSPLIT_VERIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <fsplit/splitting.hpp>

namespace fsplit
{

enum class Hypothesis { satisfied, violated, untestable };
enum class Conclusion { holds, fails, vacuous };

std::string to_string(Hypothesis h);
std::string to_string(Conclusion c);

struct LemmaReport {
    std::string lemma;
    Hypothesis hypothesis = Hypothesis::untestable;
    Conclusion conclusion = Conclusion::vacuous;
    // Counter-data, filled when the conclusion fails.
    std::map<std::string, std::string> witness;
    // Named sub-checks, including proxy flags and auxiliary mechanisms.
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;

    bool ok() const
    {
        return conclusion != Conclusion::fails;
    }
};

// d_i >= 0. The hypothesis is ord a_j >= j in the mixed (w, x)-order; also
// checks that this is equivalent to every root having mixed order >= 1.
LemmaReport verify_negpower(const RootSystem &rs, const WeierstrassPoly &f);

// Invertible row-deleted minors of b_ij(0,0), nc lowest part, d_i = 0.
// rs are the roots of f at the point.
LemmaReport verify_homog(const WeierstrassPoly &f, const RootSystem &rs, const Point &at = {});

// Realized minimal p is 1 under the proxy; for p > 1 checks that mu_p acts
// nontrivially and that two rows of b_ij(0, u) coincide.
LemmaReport verify_p1(const WeierstrassPoly &f, const Point &at = {}, int p_max = 3, int q_max = 1);

// Realized q is 0 under the proxy, the support-minimum claim after
// normalizing b_i = x_i + O(x^2), and the pole decomposition of the roots.
// Throws NotNormalizable, MultipleWVariables.
LemmaReport verify_q0(const WeierstrassPoly &f, const Point &at = {}, int p_max = 3, int q_max = 2);

// Exact expansion of the first-order sigma identity and the gamma_h
// monomial claim. Throws InvalidParams unless 2 <= k <= 6, 1 <= h < k.
LemmaReport verify_sigma_identity(int k, int h);

// is_nc is constant over the sampled points where the proxy holds.
LemmaReport verify_clopen(const WeierstrassPoly &f, const std::vector<Point> &samples);

} // namespace fsplit

#endif
