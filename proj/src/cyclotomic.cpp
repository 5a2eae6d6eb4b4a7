#include "tzeta/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tzeta {

namespace {

// Dense rational polynomials, ascending degree, used only for the mod-Phi_n
// arithmetic below. Kept local: the sparse multivariate type lives elsewhere.
using DensePoly = std::vector<Rational>;

int degree(const DensePoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

void trim(DensePoly& p) {
    p.resize(static_cast<size_t>(degree(p) + 1));
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
    if (a.empty() || b.empty()) return {};
    DensePoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// Remainder of a modulo the monic divisor d.
DensePoly rem(DensePoly a, const DensePoly& d) {
    const int dd = degree(d);
    for (int i = degree(a); i >= dd; --i) {
        const Rational lead = a[static_cast<size_t>(i)];
        if (lead.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            a[static_cast<size_t>(i - dd + j)] -= lead * d[static_cast<size_t>(j)];
    }
    trim(a);
    return a;
}

// Quotient and remainder, divisor not necessarily monic.
std::pair<DensePoly, DensePoly> divmod(DensePoly a, const DensePoly& d) {
    const int dd = degree(d);
    if (dd < 0) throw std::domain_error("cyclotomic: polynomial division by zero");
    const Rational inv_lead = d[static_cast<size_t>(dd)].inverse();
    DensePoly q(a.size());
    for (int i = degree(a); i >= dd; --i) {
        const Rational c = a[static_cast<size_t>(i)] * inv_lead;
        if (c.is_zero()) continue;
        q[static_cast<size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            a[static_cast<size_t>(i - dd + j)] -= c * d[static_cast<size_t>(j)];
    }
    trim(q);
    trim(a);
    return {q, a};
}

// Extended Euclid over Q[x]: returns (g, u) with u*a = g (mod m) and g the
// gcd (nonzero constant when a is invertible mod m).
std::pair<DensePoly, DensePoly> half_xgcd(const DensePoly& a, const DensePoly& m) {
    DensePoly r0 = a, r1 = m;
    DensePoly u0 = {Rational(1)}, u1 = {};
    while (degree(r1) >= 0) {
        auto [q, r2] = divmod(r0, r1);
        DensePoly u2 = u0;
        DensePoly qu1 = mul(q, u1);
        if (u2.size() < qu1.size()) u2.resize(qu1.size());
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Integer dense polynomials for the Phi_n table.
using IntPoly = std::vector<BigInt>;

// Exact division num / den with den monic.
IntPoly int_div_exact(IntPoly num, const IntPoly& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    while (dn >= 0 && num[static_cast<size_t>(dn)] == 0) --dn;
    if (dn < dd) return {};
    IntPoly q(static_cast<size_t>(dn - dd + 1));
    for (int i = dn; i >= dd; --i) {
        const BigInt c = num[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("cyclotomic: inexact division building Phi_n");
    return q;
}

const IntPoly& phi_table(long n) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    // Non-recursive worklist so the lock is taken once.
    std::vector<long> todo = {n};
    while (!todo.empty()) {
        const long m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (long d : divisors(m)) {
            if (d != m && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        todo.pop_back();
        // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
        IntPoly num(static_cast<size_t>(m) + 1);
        num[0] = -1;
        num[static_cast<size_t>(m)] = 1;
        for (long d : divisors(m))
            if (d != m) num = int_div_exact(std::move(num), cache.at(d));
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

DensePoly phi_rational(long n) {
    const IntPoly& z = phi_table(n);
    DensePoly out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = Rational(z[i]);
    return out;
}

}  // namespace

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        result -= result / q;
        while (m % q == 0) m /= q;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    return phi_table(n);
}

Cyclotomic::Cyclotomic(const Rational& r, long order) : order_(order) {
    if (order <= 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    coeffs_.assign(static_cast<size_t>(euler_phi(order)), Rational(0));
    coeffs_[0] = r;
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
    if (order <= 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        throw std::invalid_argument("Cyclotomic: coefficient count must equal phi(order)");
    return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_power(long order, long j) {
    if (order <= 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    j %= order;
    if (j < 0) j += order;
    DensePoly raw(static_cast<size_t>(j) + 1);
    raw[static_cast<size_t>(j)] = Rational(1);
    DensePoly r = rem(std::move(raw), phi_rational(order));
    r.resize(static_cast<size_t>(euler_phi(order)), Rational(0));
    return Cyclotomic(order, std::move(r));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_one() const {
    if (!coeffs_[0].is_integer() || coeffs_[0] != Rational(1)) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: not a rational value");
    return coeffs_[0];
}

bool Cyclotomic::is_root_of_unity() const {
    if (is_zero()) return false;
    // The roots of unity in Q(zeta_n) are exactly the lcm(2,n)-th roots.
    const long m = std::lcm(2l, order_);
    return pow(m).is_one();
}

namespace {
Cyclotomic require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("Cyclotomic: order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + "); embed to a common order first");
    return a;
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    std::vector<Rational> out = a.coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    std::vector<Rational> out = a.coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a) {
    std::vector<Rational> out = a.coeffs_;
    for (Rational& c : out) c = -c;
    return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic operator*(const Rational& c, const Cyclotomic& a) {
    std::vector<Rational> out = a.coeffs_;
    for (Rational& x : out) x *= c;
    return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    DensePoly prod = mul(a.coeffs_, b.coeffs_);
    DensePoly r = rem(std::move(prod), phi_rational(a.order_));
    r.resize(a.coeffs_.size(), Rational(0));
    return Cyclotomic(a.order_, std::move(r));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    auto [g, u] = half_xgcd(coeffs_, phi_rational(order_));
    // Phi_n is irreducible over Q, so the gcd with a nonzero residue is a
    // nonzero constant.
    if (degree(g) != 0) throw std::logic_error("Cyclotomic: xgcd returned non-constant gcd");
    const Rational scale = g[0].inverse();
    DensePoly r = rem(std::move(u), phi_rational(order_));
    r.resize(coeffs_.size(), Rational(0));
    for (Rational& c : r) c *= scale;
    return Cyclotomic(order_, std::move(r));
}

Cyclotomic Cyclotomic::pow(long k) const {
    if (k == 0) return one(order_);
    if (k < 0) return inverse().pow(-k);
    Cyclotomic base = *this;
    Cyclotomic acc = one(order_);
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1ul) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m % order_ != 0)
        throw std::invalid_argument("Cyclotomic: cannot embed order " + std::to_string(order_) +
                                    " into order " + std::to_string(m));
    if (m == order_) return *this;
    const long stride = m / order_;
    DensePoly raw(static_cast<size_t>((coeffs_.size() - 1) * static_cast<size_t>(stride)) + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * static_cast<size_t>(stride)] = coeffs_[i];
    DensePoly r = rem(std::move(raw), phi_rational(m));
    r.resize(static_cast<size_t>(euler_phi(m)), Rational(0));
    return Cyclotomic(m, std::move(r));
}

std::complex<double> Cyclotomic::to_complex(int digits) const {
    if (digits < 1 || digits > 15)
        throw std::invalid_argument("Cyclotomic::to_complex: digits must be in [1, 15]");
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    std::complex<long double> acc(0.0L, 0.0L);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const long double angle = two_pi * static_cast<long double>(i) / static_cast<long double>(order_);
        acc += static_cast<long double>(coeffs_[i].to_double()) *
               std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return coeffs_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.to_string();
        } else {
            if (c != Rational(1)) os << c.to_string() << "*";
            os << "zeta(" << order_ << ")";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::pair<Cyclotomic, Cyclotomic> with_common_order(const Cyclotomic& a, const Cyclotomic& b) {
    const long m = std::lcm(a.order(), b.order());
    return {a.embedded(m), b.embedded(m)};
}

bool values_equal(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = with_common_order(a, b);
    return x == y;
}

}  // namespace tzeta
