#pragma once

#include "tzeta/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace tzeta {

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

/// Element of Q(zeta_n), stored as the residue of a polynomial in zeta_n
/// modulo Phi_n, on the basis 1, zeta, ..., zeta^{phi(n)-1}. The
/// representation is canonical: equality is coefficientwise (same order).
///
/// Binary operations require equal orders; lift first with embedded() /
/// with_common_order() when mixing.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1) {}
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}  // NOLINT: rationals embed in every Q(zeta_n)
    explicit Cyclotomic(const Rational& r, long order = 1);

    static Cyclotomic zero(long order) { return Cyclotomic(Rational(0), order); }
    static Cyclotomic one(long order) { return Cyclotomic(Rational(1), order); }
    /// zeta_order^j (j arbitrary, reduced mod order).
    static Cyclotomic root_power(long order, long j);
    /// From raw basis coefficients, length phi(order).
    static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Contract: is_rational().
    Rational as_rational() const;
    bool is_root_of_unity() const;

    Cyclotomic inverse() const;
    Cyclotomic pow(long k) const;

    /// Lift into Q(zeta_m); contract: order() divides m.
    Cyclotomic embedded(long m) const;

    /// Numerical value under zeta_n -> exp(2*pi*i/n). Accurate to roughly
    /// machine precision for well-conditioned inputs; digits must be <= 15.
    std::complex<double> to_complex(int digits = 15) const;

    std::string to_string() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend Cyclotomic operator*(const Rational& c, const Cyclotomic& a);

    Cyclotomic& operator+=(const Cyclotomic& b) { *this = *this + b; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& b) { *this = *this - b; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    Cyclotomic(long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    long order_;
    std::vector<Rational> coeffs_;
};

/// Equality after lifting both sides to the lcm of their orders.
bool values_equal(const Cyclotomic& a, const Cyclotomic& b);

/// Lift both elements into Q(zeta_lcm).
std::pair<Cyclotomic, Cyclotomic> with_common_order(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace tzeta
