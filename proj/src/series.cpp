#include <fsplit/errors.hpp>
#include <fsplit/series.hpp>

#include <algorithm>
#include <numeric>

namespace fsplit
{

int ExpPair::alpha_total() const
{
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

Rational ExpPair::beta_total() const
{
    Rational s = 0;
    for (const auto &b : beta) {
        s += b;
    }
    return s;
}

std::strong_ordering compare_support(const ExpPair &a, const ExpPair &b)
{
    if (a.alpha.size() != b.alpha.size() || a.beta.size() != b.beta.size()) {
        fail(ErrorCode::DimensionMismatch, "support elements of different shapes");
    }
    const int na = a.alpha_total();
    const int nb = b.alpha_total();
    const Rational ka = na + a.beta_total();
    const Rational kb = nb + b.beta_total();
    if (ka != kb) {
        return ka < kb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (na != nb) {
        return na <=> nb;
    }
    return a.alpha <=> b.alpha;
}

PuiseuxSeries::PuiseuxSeries(int r, int num_x, int p, int q, int trunc)
    : r_(r), m_(num_x), p_(p), q_(q), trunc_(trunc)
{
    if (r < 0 || num_x < 0 || p < 1 || q < 0 || trunc < 0) {
        fail(ErrorCode::InvalidParams, "bad series frame");
    }
}

int PuiseuxSeries::internal_degree(const Exps &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

void PuiseuxSeries::insert(Exps e, const FieldElem &c)
{
    if (c.is_zero() || internal_degree(e) > trunc_) {
        return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

PuiseuxSeries PuiseuxSeries::constant(int r, int num_x, const FieldElem &c, int trunc)
{
    PuiseuxSeries s(r, num_x, 1, 0, trunc);
    s.insert(Exps(static_cast<std::size_t>(r + num_x), 0), c);
    return s;
}

PuiseuxSeries PuiseuxSeries::x(int r, int num_x, int i, int trunc)
{
    if (i < 0 || i >= num_x) {
        fail(ErrorCode::IndexOutOfRange, "x index " + std::to_string(i));
    }
    PuiseuxSeries s(r, num_x, 1, 0, trunc);
    Exps e(static_cast<std::size_t>(r + num_x), 0);
    e[static_cast<std::size_t>(r + i)] = 1;
    s.insert(std::move(e), FieldElem(1));
    return s;
}

PuiseuxSeries PuiseuxSeries::w(int r, int num_x, int j, int trunc)
{
    if (j < 0 || j >= r) {
        fail(ErrorCode::IndexOutOfRange, "w index " + std::to_string(j));
    }
    PuiseuxSeries s(r, num_x, 1, 0, trunc);
    Exps e(static_cast<std::size_t>(r + num_x), 0);
    e[static_cast<std::size_t>(j)] = 1;
    s.insert(std::move(e), FieldElem(1));
    return s;
}

PuiseuxSeries::Exps PuiseuxSeries::internal_of(const ExpPair &e) const
{
    if (static_cast<int>(e.alpha.size()) != m_ || static_cast<int>(e.beta.size()) != r_) {
        fail(ErrorCode::DimensionMismatch, "exponent shape does not match series");
    }
    const int na = e.alpha_total();
    Exps out(static_cast<std::size_t>(r_ + m_), 0);
    for (int j = 0; j < r_; ++j) {
        const Rational scaled = e.beta[static_cast<std::size_t>(j)] * p_;
        if (scaled.get_den() != 1) {
            fail(ErrorCode::InvalidParams, "w exponent " + to_string(e.beta[static_cast<std::size_t>(j)]) +
                                               " not over p = " + std::to_string(p_));
        }
        const long a = scaled.get_num().get_si() + long(p_) * q_ * na;
        if (a < 0) {
            fail(ErrorCode::PoleBound, "w exponent " + to_string(e.beta[static_cast<std::size_t>(j)]) +
                                           " below -q|alpha|");
        }
        out[static_cast<std::size_t>(j)] = static_cast<int>(a);
    }
    for (int i = 0; i < m_; ++i) {
        if (e.alpha[static_cast<std::size_t>(i)] < 0) {
            fail(ErrorCode::InvalidParams, "negative x exponent");
        }
        out[static_cast<std::size_t>(r_ + i)] = e.alpha[static_cast<std::size_t>(i)];
    }
    return out;
}

ExpPair PuiseuxSeries::pair_of(const Exps &e) const
{
    ExpPair out;
    out.alpha.assign(e.begin() + r_, e.end());
    const int na = out.alpha_total();
    for (int j = 0; j < r_; ++j) {
        out.beta.push_back(Rational(e[static_cast<std::size_t>(j)] - p_ * q_ * na, p_));
        out.beta.back().canonicalize();
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::from_pairs(int r, int num_x, int p, int q, int trunc,
                                        const std::vector<std::pair<ExpPair, FieldElem>> &terms)
{
    PuiseuxSeries s(r, num_x, p, q, trunc);
    for (const auto &[e, c] : terms) {
        s.insert(s.internal_of(e), c);
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::from_internal(int r, int num_x, int p, int q, int trunc, const TermMap &terms)
{
    PuiseuxSeries s(r, num_x, p, q, trunc);
    for (const auto &[e, c] : terms) {
        if (static_cast<int>(e.size()) != r + num_x) {
            fail(ErrorCode::DimensionMismatch, "internal exponent of wrong length");
        }
        if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; })) {
            fail(ErrorCode::PoleBound, "negative internal exponent");
        }
        s.insert(e, c);
    }
    return s;
}

std::vector<std::pair<ExpPair, FieldElem>> PuiseuxSeries::terms() const
{
    std::vector<std::pair<ExpPair, FieldElem>> out;
    out.reserve(terms_.size());
    for (const auto &[e, c] : terms_) {
        out.emplace_back(pair_of(e), c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return compare_support(a.first, b.first) < 0; });
    return out;
}

FieldElem PuiseuxSeries::coeff(const ExpPair &e) const
{
    auto it = terms_.find(internal_of(e));
    return it == terms_.end() ? FieldElem() : it->second;
}

PuiseuxSeries PuiseuxSeries::reframed(int p, int q) const
{
    if (p < 1 || p % p_ != 0 || q < q_) {
        fail(ErrorCode::InvalidParams, "cannot reframe (" + std::to_string(p_) + "," + std::to_string(q_) +
                                           ") to (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    if (p == p_ && q == q_) {
        return *this;
    }
    const int t = p / p_;
    PuiseuxSeries s(r_, m_, p, q, trunc_);
    for (const auto &[e, c] : terms_) {
        Exps ne = e;
        int na = 0;
        for (int i = 0; i < m_; ++i) {
            na += e[static_cast<std::size_t>(r_ + i)];
        }
        for (int j = 0; j < r_; ++j) {
            ne[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] * t + p * (q - q_) * na;
        }
        s.insert(std::move(ne), c);
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::truncated(int trunc) const
{
    PuiseuxSeries s(r_, m_, p_, q_, std::min(trunc, trunc_));
    for (const auto &[e, c] : terms_) {
        s.insert(e, c);
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::scaled(const FieldElem &c) const
{
    return map_terms([&](const Exps &, const FieldElem &a) { return a * c; });
}

PuiseuxSeries PuiseuxSeries::map_terms(const std::function<FieldElem(const Exps &, const FieldElem &)> &fn) const
{
    PuiseuxSeries s(r_, m_, p_, q_, trunc_);
    for (const auto &[e, c] : terms_) {
        s.insert(e, fn(e, c));
    }
    return s;
}

void PuiseuxSeries::check_dims(const PuiseuxSeries &o) const
{
    if (r_ != o.r_ || m_ != o.m_) {
        fail(ErrorCode::DimensionMismatch, "series over different variables");
    }
}

void unify_frames(PuiseuxSeries &a, PuiseuxSeries &b)
{
    if (a.r() != b.r() || a.num_x() != b.num_x()) {
        fail(ErrorCode::DimensionMismatch, "series over different variables");
    }
    const int p = std::lcm(a.p(), b.p());
    const int q = std::max(a.q(), b.q());
    const int n = std::min(a.trunc(), b.trunc());
    a = a.reframed(p, q).truncated(n);
    b = b.reframed(p, q).truncated(n);
}

PuiseuxSeries operator+(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    PuiseuxSeries x = a;
    PuiseuxSeries y = b;
    unify_frames(x, y);
    for (const auto &[e, c] : y.terms_) {
        x.insert(e, c);
    }
    return x;
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    return map_terms([](const Exps &, const FieldElem &c) { return -c; });
}

PuiseuxSeries operator-(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    PuiseuxSeries x = a;
    PuiseuxSeries y = b;
    unify_frames(x, y);
    PuiseuxSeries out(x.r_, x.m_, x.p_, x.q_, x.trunc_);
    for (const auto &[ea, ca] : x.terms_) {
        const int da = PuiseuxSeries::internal_degree(ea);
        for (const auto &[eb, cb] : y.terms_) {
            if (da + PuiseuxSeries::internal_degree(eb) > out.trunc_) {
                continue;
            }
            PuiseuxSeries::Exps e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            out.insert(std::move(e), ca * cb);
        }
    }
    return out;
}

bool equal_mod_trunc(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    PuiseuxSeries x = a;
    PuiseuxSeries y = b;
    unify_frames(x, y);
    return x.internal_terms() == y.internal_terms();
}

std::optional<Rational> PuiseuxSeries::valuation(Grading g) const
{
    std::optional<Rational> best;
    for (const auto &[e, c] : terms_) {
        Rational v;
        if (g == Grading::internal) {
            v = internal_degree(e);
        } else {
            const ExpPair pe = pair_of(e);
            v = pe.alpha_total();
            if (g == Grading::xz_total) {
                v += pe.beta_total();
            }
        }
        if (!best || v < *best) {
            best = v;
        }
    }
    return best;
}

PuiseuxSeries PuiseuxSeries::invert_unit() const
{
    const Exps zero(static_cast<std::size_t>(r_ + m_), 0);
    auto it = terms_.find(zero);
    if (it == terms_.end()) {
        fail(ErrorCode::NotAUnit, "series has no constant term");
    }
    const FieldElem c0_inv = it->second.inverse();
    // 1/f = c0^{-1} sum_n (-g)^n with g = f/c0 - 1 of internal order >= 1.
    PuiseuxSeries g = scaled(c0_inv);
    g.terms_.erase(zero);
    const PuiseuxSeries neg_g = -g;
    PuiseuxSeries sum = constant(r_, m_, FieldElem(1), trunc_).reframed(p_, q_);
    PuiseuxSeries power = sum;
    for (int n = 1; n <= trunc_ && !power.is_zero(); ++n) {
        power = power * neg_g;
        sum += power;
    }
    return sum.scaled(c0_inv);
}

ExpPair PuiseuxSeries::support_min() const
{
    if (terms_.empty()) {
        fail(ErrorCode::ZeroSeries, "support of the zero series");
    }
    std::optional<ExpPair> best;
    for (const auto &[e, c] : terms_) {
        ExpPair pe = pair_of(e);
        if (!best || compare_support(pe, *best) < 0) {
            best = std::move(pe);
        }
    }
    return *best;
}

std::string PuiseuxSeries::str() const
{
    std::string out;
    for (const auto &[e, c] : terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + c.str() + ")";
        for (std::size_t i = 0; i < e.alpha.size(); ++i) {
            if (e.alpha[i] != 0) {
                out += "*x" + std::to_string(i + 1) + "^" + std::to_string(e.alpha[i]);
            }
        }
        for (std::size_t j = 0; j < e.beta.size(); ++j) {
            if (e.beta[j] != 0) {
                out += "*w" + std::to_string(j + 1) + "^" + to_string(e.beta[j]);
            }
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(" + std::to_string(trunc_ + 1) + ")";
}

PuiseuxSeries substitute(const PuiseuxSeries &f, const std::map<int, PuiseuxSeries> &assignment)
{
    const int r = f.r();
    const int m = f.num_x();
    int P = f.p();
    int QS = 0;
    int N = f.trunc();
    for (const auto &[i, s] : assignment) {
        if (i < 0 || i >= m) {
            fail(ErrorCode::IndexOutOfRange, "substituted x index " + std::to_string(i));
        }
        if (s.r() != r || s.num_x() != m) {
            fail(ErrorCode::DimensionMismatch, "substituted series over different variables");
        }
        P = std::lcm(P, s.p());
        QS = std::max(QS, s.q());
        N = std::min(N, s.trunc());
    }
    std::vector<PuiseuxSeries> images;
    for (int i = 0; i < m; ++i) {
        auto it = assignment.find(i);
        PuiseuxSeries s = it == assignment.end() ? PuiseuxSeries::x(r, m, i, N) : it->second;
        s = s.reframed(P, QS).truncated(N);
        for (const auto &[e, c] : s.internal_terms()) {
            if (PuiseuxSeries::internal_degree(e) < 1) {
                fail(ErrorCode::TruncationLoss, "replacement for x" + std::to_string(i + 1) + " has a constant term");
            }
            if (f.q() > 0 && std::all_of(e.begin() + r, e.end(), [](int a) { return a == 0; })) {
                fail(ErrorCode::PoleBound, "replacement for x" + std::to_string(i + 1) +
                                               " has a term free of x while the source has poles");
            }
        }
        images.push_back(std::move(s));
    }
    const int QF = f.q();
    const int QR = QF + QS;
    const PuiseuxSeries src = f.reframed(P, QF).truncated(N);
    // powers[i][n] = images[i]^n, built on demand.
    std::vector<std::vector<PuiseuxSeries>> powers(static_cast<std::size_t>(m));
    auto power = [&](int i, int n) -> const PuiseuxSeries & {
        auto &pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) {
            pw.push_back(PuiseuxSeries::constant(r, m, FieldElem(1), N).reframed(P, QS));
        }
        while (static_cast<int>(pw.size()) <= n) {
            pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
        }
        return pw[static_cast<std::size_t>(n)];
    };
    PuiseuxSeries::TermMap acc;
    for (const auto &[ea, ca] : src.internal_terms()) {
        PuiseuxSeries prod = PuiseuxSeries::constant(r, m, FieldElem(1), N).reframed(P, QS);
        int nc = 0;
        for (int i = 0; i < m; ++i) {
            const int c = ea[static_cast<std::size_t>(r + i)];
            nc += c;
            if (c > 0) {
                prod = prod * power(i, c);
            }
        }
        for (const auto &[eb, cb] : prod.internal_terms()) {
            int ne = 0;
            for (int i = 0; i < m; ++i) {
                ne += eb[static_cast<std::size_t>(r + i)];
            }
            PuiseuxSeries::Exps e(static_cast<std::size_t>(r + m), 0);
            for (int j = 0; j < r; ++j) {
                e[static_cast<std::size_t>(j)] = ea[static_cast<std::size_t>(j)] + eb[static_cast<std::size_t>(j)] +
                                                 P * QF * (ne - nc);
            }
            std::copy(eb.begin() + r, eb.end(), e.begin() + r);
            if (PuiseuxSeries::internal_degree(e) > N) {
                continue;
            }
            auto [it, fresh] = acc.try_emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
            }
        }
    }
    return PuiseuxSeries::from_internal(r, m, P, QR, N, acc);
}

} // namespace fsplit
