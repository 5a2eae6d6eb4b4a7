#pragma once

#include "tzeta/bigint.hpp"
#include "tzeta/cyclotomic.hpp"
#include "tzeta/rational.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tzeta {

/// Thrown when a result cannot be determined at the working precision
/// (e.g. inverting a value that is zero modulo everything we know).
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a cyclotomic element has no image in Q_p (order does not
/// divide p - 1).
struct EmbeddingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated p-adic number. A nonzero value is u * p^v with unit u known
/// modulo p^prec (so the value is known modulo p^{v+prec} and its valuation
/// is exactly v). A "zero" value is one indistinguishable from 0 at the
/// working precision: all that is known is value ≡ 0 mod p^{abs_prec}.
/// Arithmetic propagates the guaranteed precision; cancellation lowers it.
class PAdic {
public:
    static constexpr long kInfinitePrecision = std::numeric_limits<long>::max() / 4;

    static PAdic exact_zero(long p) { return zero(p, kInfinitePrecision); }
    static PAdic zero(long p, long abs_precision);
    static PAdic from_integer(const BigInt& n, long p, int prec);
    static PAdic from_integer(long n, long p, int prec) { return from_integer(BigInt(n), p, prec); }
    /// Contract: p does not divide the denominator.
    static PAdic from_rational(const Rational& r, long p, int prec);
    static PAdic one(long p, int prec) { return from_integer(1, p, prec); }

    long p() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_prec_ >= kInfinitePrecision; }

    /// Contract: !is_zero() (the valuation of a zero-at-precision value is
    /// only bounded below; see valuation_lower_bound).
    long valuation() const;
    long valuation_lower_bound() const { return zero_ ? abs_prec_ : val_; }
    /// The value is known modulo p^{abs_precision()}.
    long abs_precision() const { return zero_ ? abs_prec_ : sat_add(val_, prec_); }
    /// Known digits of the unit part; 0 for zero values.
    int precision() const { return zero_ ? 0 : prec_; }
    /// Contract: !is_zero(). In [1, p^precision), coprime to p.
    const BigInt& unit() const;

    /// |x|_p = p^{-valuation}. Contract: the norm is determined, i.e.
    /// !is_zero() or is_exact_zero().
    double norm() const;
    /// Always defined: p^{-valuation_lower_bound()} (0 for an exact zero).
    double norm_upper_bound() const;

    PAdic inverse() const;
    PAdic pow(long k) const;
    /// Reduce the guaranteed absolute precision to at most m.
    PAdic capped_abs_precision(long m) const;

    /// Unit digits base p, little-endian, length precision(). Contract: !is_zero().
    std::vector<long> unit_digits() const;
    std::string to_string() const;

    friend PAdic operator+(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a, const PAdic& b);
    friend PAdic operator*(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a);

    PAdic& operator+=(const PAdic& b) { *this = *this + b; return *this; }
    PAdic& operator-=(const PAdic& b) { *this = *this - b; return *this; }
    PAdic& operator*=(const PAdic& b) { *this = *this * b; return *this; }

private:
    PAdic(long p, long val, int prec, BigInt unit)
        : p_(p), zero_(false), val_(val), prec_(prec), abs_prec_(0), unit_(std::move(unit)) {}
    PAdic(long p, long abs_prec) : p_(p), zero_(true), val_(0), prec_(0), abs_prec_(abs_prec) {}

    static long sat_add(long a, long b);
    static void require_same_p(const PAdic& a, const PAdic& b);
    static PAdic make(long p, long val, long abs_prec, const BigInt& sig);

    long p_;
    bool zero_;
    long val_;
    int prec_;
    long abs_prec_;
    BigInt unit_;
};

/// True when a ≡ b mod p^m. Throws PrecisionError if either side is not
/// known to absolute precision m.
bool congruent_mod(const PAdic& a, const PAdic& b, long m);

/// The Teichmueller representative w with w^{p-1} = 1 (mod p^prec) and
/// w ≡ x (mod p), computed by iterating w <- w^p to a fixed point.
/// Contract: p does not divide x.
PAdic teichmuller(const BigInt& x, long p, int prec);
/// Contract: x is a unit (valuation 0).
PAdic teichmuller(const PAdic& x);

/// <x> = x / w(x), congruent to 1 mod p. Contract: x is a unit.
PAdic angle_bracket(const PAdic& x);

/// base^exponent for base ≡ 1 (mod p), exponent any p-adic integer,
/// via the binomial series in (base - 1).
PAdic unit_pow(const PAdic& base, const PAdic& exponent);

/// v_p(n!) by Legendre's formula.
long factorial_valuation(unsigned long n, long p);

/// Which primitive root realizes each cyclotomic order inside Z_p.
/// Default: the smallest residue of exact multiplicative order n in (Z/p)^*.
struct EmbeddingChoice {
    std::map<long, long> root_residue;  // order -> residue override

    long residue_for(long order, long p) const;
};

/// Field embedding Q(zeta_n) -> Q_p for n | p-1: zeta_n maps to the
/// Teichmueller lift of the chosen primitive n-th root of unity mod p.
/// Throws EmbeddingError when n does not divide p-1.
PAdic embed_cyclotomic(const Cyclotomic& a, long p, int prec, const EmbeddingChoice& choice = {});

}  // namespace tzeta
