#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tzeta {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_pow(long base, unsigned long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp & 1ul)) out = -out;
    return out;
}

/// Exponent of the largest power of p dividing n. Contract: n != 0, p >= 2.
inline long padic_valuation(const BigInt& n, long p) {
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
    BigInt rest;
    const BigInt bp(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t()));
}

/// Inverse of a modulo m. Contract: gcd(a, m) = 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible modulo " + m.get_str());
    return out;
}

inline BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
    BigInt out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return out;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    const BigInt b(n);
    return mpz_probab_prime_p(b.get_mpz_t(), 30) != 0;
}

}  // namespace tzeta
