#include <fsplit/cyclotomic.hpp>
#include <fsplit/errors.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace fsplit
{

namespace
{

using UPoly = std::vector<Rational>; // low to high

void trim(UPoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

UPoly poly_mul(const UPoly &a, const UPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

UPoly poly_sub(UPoly a, const UPoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> poly_divmod(UPoly a, const UPoly &b)
{
    trim(a);
    UPoly q;
    if (a.size() < b.size()) {
        return {q, a};
    }
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= c * b[i];
        }
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

std::array<std::vector<Rational>, Cyclotomic::max_order + 1> build_cyclotomic_table()
{
    std::array<std::vector<Rational>, Cyclotomic::max_order + 1> table;
    for (int n = 1; n <= Cyclotomic::max_order; ++n) {
        // x^n - 1 divided by Phi_d for all proper divisors d.
        UPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
        p[0] = -1;
        p[static_cast<std::size_t>(n)] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d == 0) {
                p = poly_divmod(p, table[static_cast<std::size_t>(d)]).first;
            }
        }
        table[static_cast<std::size_t>(n)] = p;
    }
    return table;
}

const std::array<std::vector<Rational>, Cyclotomic::max_order + 1> &cyclotomic_table()
{
    static const auto table = build_cyclotomic_table();
    return table;
}

void check_order(int n)
{
    if (n < 1) {
        fail(ErrorCode::InvalidParams, "cyclotomic order must be positive");
    }
    if (n > Cyclotomic::max_order) {
        fail(ErrorCode::NeedsExtension, "cyclotomic order " + std::to_string(n) + " exceeds the supported tower");
    }
}

// Reduce a polynomial in zeta_n to a vector of length phi(n).
std::vector<Rational> reduce_mod(UPoly p, int n)
{
    const auto &phi_poly = cyclotomic_polynomial(n);
    trim(p);
    auto r = poly_divmod(std::move(p), phi_poly).second;
    r.resize(static_cast<std::size_t>(totient(n)), Rational(0));
    return r;
}

// Solves M c = x over Q where M has the given columns; nullopt if
// inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>> &cols,
                                                   const std::vector<Rational> &x)
{
    const std::size_t rows = x.size();
    const std::size_t ncols = cols.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
            a[i][j] = cols[j][i];
        }
        a[i][ncols] = x[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(a[piv], a[row]);
        const Rational inv = 1 / a[row][col];
        for (auto &v : a[row]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != row && a[i][col] != 0) {
                const Rational f = a[i][col];
                for (std::size_t j = col; j <= ncols; ++j) {
                    a[i][j] -= f * a[row][j];
                }
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i) {
        if (a[i][ncols] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> c(ncols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        c[pivot_col[i]] = a[i][ncols];
    }
    return c;
}

} // namespace

int totient(int n)
{
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

const std::vector<Rational> &cyclotomic_polynomial(int n)
{
    check_order(n);
    return cyclotomic_table()[static_cast<std::size_t>(n)];
}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs)
{
    check_order(n);
    Cyclotomic c(n, reduce_mod(std::move(coeffs), n), true);
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::zeta(int n, long power)
{
    check_order(n);
    long e = power % n;
    if (e < 0) {
        e += n;
    }
    UPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return from_coeffs(n, std::move(p));
}

bool Cyclotomic::is_zero() const
{
    return order_ == 1 && coeffs_[0] == 0;
}

bool Cyclotomic::is_one() const
{
    return order_ == 1 && coeffs_[0] == 1;
}

std::vector<Rational> Cyclotomic::coeffs_in(int m) const
{
    if (m % order_ != 0) {
        fail(ErrorCode::IncompatibleOrders,
             "order " + std::to_string(order_) + " does not divide " + std::to_string(m));
    }
    check_order(m);
    const std::size_t step = static_cast<std::size_t>(m / order_);
    UPoly p(coeffs_.size() * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[i * step] = coeffs_[i];
    }
    return reduce_mod(std::move(p), m);
}

void Cyclotomic::canonicalize()
{
    if (order_ == 1) {
        return;
    }
    // Rational fast path.
    if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational &q) { return q == 0; })) {
        coeffs_.resize(1);
        order_ = 1;
        return;
    }
    for (int d = 2; d < order_; ++d) {
        if (order_ % d != 0) {
            continue;
        }
        const int phi_d = totient(d);
        std::vector<std::vector<Rational>> cols;
        cols.reserve(static_cast<std::size_t>(phi_d));
        for (int i = 0; i < phi_d; ++i) {
            cols.push_back(Cyclotomic::zeta(d, i).coeffs_in(order_));
        }
        if (auto sol = solve_columns(cols, coeffs_)) {
            order_ = d;
            coeffs_ = std::move(*sol);
            return;
        }
    }
}

Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.order_ == 1 && b.order_ == 1) {
        return Cyclotomic(a.coeffs_[0] + b.coeffs_[0]);
    }
    const int m = std::lcm(a.order_, b.order_);
    auto x = a.coeffs_in(m);
    const auto y = b.coeffs_in(m);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += y[i];
    }
    Cyclotomic r(m, std::move(x), true);
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b)
{
    return a + (-b);
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.order_ == 1 && b.order_ == 1) {
        return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
    }
    if (a.order_ == 1 || b.order_ == 1) {
        const Rational &s = a.order_ == 1 ? a.coeffs_[0] : b.coeffs_[0];
        Cyclotomic r = a.order_ == 1 ? b : a;
        if (s == 0) {
            return Cyclotomic();
        }
        for (auto &c : r.coeffs_) {
            c *= s;
        }
        return r;
    }
    const int m = std::lcm(a.order_, b.order_);
    Cyclotomic r(m, reduce_mod(poly_mul(a.coeffs_in(m), b.coeffs_in(m)), m), true);
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        fail(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_n)");
    }
    if (order_ == 1) {
        return Cyclotomic(1 / coeffs_[0]);
    }
    // Extended Euclid: s*a + t*Phi = 1.
    UPoly r0 = cyclotomic_polynomial(order_);
    UPoly r1 = coeffs_;
    trim(r1);
    UPoly s0;
    UPoly s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = poly_divmod(r0, r1);
        UPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational c = 1 / r1[0];
    for (auto &v : s1) {
        v *= c;
    }
    return Cyclotomic::from_coeffs(order_, s1);
}

Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b)
{
    return a * b.inverse();
}

bool canonical_less(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.order_ != b.order_) {
        return a.order_ < b.order_;
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) {
            return c < 0;
        }
    }
    return false;
}

std::string Cyclotomic::str() const
{
    if (order_ == 1) {
        return to_string(coeffs_[0]);
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(coeffs_[i]) + ")";
        if (i > 0) {
            out += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        }
    }
    return out;
}

Cyclotomic embed_cyclotomic(const Cyclotomic &e, int target_order)
{
    check_order(target_order);
    if (target_order % e.order() != 0) {
        fail(ErrorCode::IncompatibleOrders,
             "order " + std::to_string(e.order()) + " does not divide " + std::to_string(target_order));
    }
    return Cyclotomic::from_coeffs(target_order, e.coeffs_in(target_order));
}

std::optional<Cyclotomic> tower_sqrt(const Cyclotomic &a)
{
    if (!a.is_rational()) {
        return std::nullopt;
    }
    const Rational &q = a.rational();
    if (q == 0) {
        return Cyclotomic();
    }
    // q = sign * N/D; sqrt(N*D)/D.
    Integer nd = abs(q.get_num()) * q.get_den();
    Integer square = 1;
    Integer rest = 1;
    // Split nd = square^2 * rest with rest square-free (trial division is fine
    // at the sizes we see).
    Integer m = nd;
    for (Integer p = 2; p * p <= m; ++p) {
        Integer pp = p * p;
        while (m % pp == 0) {
            m /= pp;
            square *= p;
        }
        if (m % p == 0) {
            m /= p;
            rest *= p;
        }
    }
    rest *= m;
    const long d = (q < 0 ? -1 : 1) * rest.get_si();
    // Q(sqrt d) lies in Q(zeta_c) with c its conductor.
    const long conductor = ((d % 4) + 4) % 4 == 1 ? std::abs(d) : 4 * std::abs(d);
    if (!rest.fits_slong_p() || conductor > 24) {
        return std::nullopt;
    }
    const Cyclotomic scale(Rational(square, q.get_den()));
    Cyclotomic root(1);
    long left = rest.get_si();
    for (long p = 2; p <= left; ++p) {
        if (left % p != 0) {
            continue;
        }
        left /= p;
        if (p == 2) {
            root *= Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
            continue;
        }
        // Gauss sum, squares to (-1)^((p-1)/2) p
        Cyclotomic g;
        for (long a = 1; a < p; ++a) {
            long t = 1;
            for (long e = 0; e < (p - 1) / 2; ++e) {
                t = t * a % p;
            }
            g += t == 1 ? Cyclotomic::zeta(static_cast<int>(p), a) : -Cyclotomic::zeta(static_cast<int>(p), a);
        }
        root *= g;
    }
    if (!(root * root == Cyclotomic(d))) {
        root *= Cyclotomic::zeta(4);
    }
    Cyclotomic r = scale * root;
    if (!(r * r == a)) {
        return std::nullopt;
    }
    return r;
}

} // namespace fsplit
