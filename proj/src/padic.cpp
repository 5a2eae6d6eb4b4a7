#include "tzeta/padic.hpp"

#include <cmath>
#include <sstream>

namespace tzeta {

long PAdic::sat_add(long a, long b) {
    if (a >= kInfinitePrecision || b >= kInfinitePrecision) return kInfinitePrecision;
    const long s = a + b;
    return s >= kInfinitePrecision ? kInfinitePrecision : s;
}

PAdic PAdic::zero(long p, long abs_precision) {
    if (p < 2) throw std::invalid_argument("PAdic: p must be >= 2");
    return PAdic(p, abs_precision);
}

PAdic PAdic::from_integer(const BigInt& n, long p, int prec) {
    if (p < 2) throw std::invalid_argument("PAdic: p must be >= 2");
    if (prec < 1) throw std::invalid_argument("PAdic: precision must be >= 1");
    if (n == 0) return exact_zero(p);
    BigInt u;
    const BigInt bp(p);
    const long v = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t()));
    const BigInt mod = big_pow(p, static_cast<unsigned long>(prec));
    u %= mod;
    if (u < 0) u += mod;
    return PAdic(p, v, prec, std::move(u));
}

PAdic PAdic::from_rational(const Rational& r, long p, int prec) {
    if (r.is_zero()) return exact_zero(p);
    const BigInt num = r.numerator();
    const BigInt den = r.denominator();
    BigInt nu, du;
    const BigInt bp(p);
    const long vn = static_cast<long>(mpz_remove(nu.get_mpz_t(), num.get_mpz_t(), bp.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(du.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()));
    const BigInt mod = big_pow(p, static_cast<unsigned long>(prec));
    BigInt u = (nu % mod) * mod_inverse(du, mod) % mod;
    if (u < 0) u += mod;
    return PAdic(p, vn - vd, prec, std::move(u));
}

long PAdic::valuation() const {
    if (zero_)
        throw PrecisionError("PAdic: valuation undetermined (value is 0 mod p^" +
                             std::to_string(abs_prec_) + ")");
    return val_;
}

const BigInt& PAdic::unit() const {
    if (zero_) throw PrecisionError("PAdic: zero value has no unit part");
    return unit_;
}

double PAdic::norm() const {
    if (is_exact_zero()) return 0.0;
    if (zero_)
        throw PrecisionError("PAdic: norm undetermined at this precision; use norm_upper_bound");
    return std::pow(static_cast<double>(p_), static_cast<double>(-val_));
}

double PAdic::norm_upper_bound() const {
    if (is_exact_zero()) return 0.0;
    return std::pow(static_cast<double>(p_), static_cast<double>(-valuation_lower_bound()));
}

void PAdic::require_same_p(const PAdic& a, const PAdic& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PAdic: mixed primes");
}

// Build from a signed representative `sig` of value * p^{-val} known modulo
// p^{abs_prec - val}.
PAdic PAdic::make(long p, long val, long abs_prec, const BigInt& sig) {
    if (abs_prec >= kInfinitePrecision && sig == 0) return exact_zero(p);
    const long rel = abs_prec >= kInfinitePrecision ? kInfinitePrecision : abs_prec - val;
    if (rel <= 0) return PAdic(p, abs_prec);
    BigInt mod = big_pow(p, static_cast<unsigned long>(rel));
    BigInt u = sig % mod;
    if (u < 0) u += mod;
    if (u == 0) return PAdic(p, abs_prec);
    BigInt u0;
    const BigInt bp(p);
    const long extra = static_cast<long>(mpz_remove(u0.get_mpz_t(), u.get_mpz_t(), bp.get_mpz_t()));
    const long new_val = val + extra;
    const long new_rel = abs_prec >= kInfinitePrecision ? kInfinitePrecision : abs_prec - new_val;
    if (new_rel <= 0) return PAdic(p, abs_prec);
    const int stored = static_cast<int>(std::min<long>(new_rel, std::numeric_limits<int>::max() / 2));
    mod = big_pow(p, static_cast<unsigned long>(stored));
    u0 %= mod;
    return PAdic(p, new_val, stored, std::move(u0));
}

PAdic operator+(const PAdic& a, const PAdic& b) {
    PAdic::require_same_p(a, b);
    const long abs_prec = std::min(a.abs_precision(), b.abs_precision());
    if (a.zero_ && b.zero_) return PAdic(a.p_, abs_prec);
    if (a.zero_) return b.capped_abs_precision(abs_prec);
    if (b.zero_) return a.capped_abs_precision(abs_prec);
    const long vmin = std::min(a.val_, b.val_);
    const BigInt sig = a.unit_ * big_pow(a.p_, static_cast<unsigned long>(a.val_ - vmin)) +
                       b.unit_ * big_pow(b.p_, static_cast<unsigned long>(b.val_ - vmin));
    return PAdic::make(a.p_, vmin, abs_prec, sig);
}

PAdic operator-(const PAdic& a) {
    if (a.zero_) return a;
    BigInt mod = big_pow(a.p_, static_cast<unsigned long>(a.prec_));
    BigInt u = mod - a.unit_;
    return PAdic(a.p_, a.val_, a.prec_, std::move(u));
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
    PAdic::require_same_p(a, b);
    if (a.zero_ || b.zero_) {
        // |xy|_p <= p^{-(lower bound a)-(lower bound b)}
        return PAdic(a.p_, PAdic::sat_add(a.valuation_lower_bound(), b.valuation_lower_bound()));
    }
    const int prec = std::min(a.prec_, b.prec_);
    const BigInt mod = big_pow(a.p_, static_cast<unsigned long>(prec));
    BigInt u = a.unit_ * b.unit_ % mod;
    return PAdic(a.p_, a.val_ + b.val_, prec, std::move(u));
}

PAdic PAdic::inverse() const {
    if (zero_)
        throw PrecisionError("PAdic: cannot invert a value that is zero at the working precision");
    const BigInt mod = big_pow(p_, static_cast<unsigned long>(prec_));
    return PAdic(p_, -val_, prec_, mod_inverse(unit_, mod));
}

PAdic PAdic::pow(long k) const {
    if (k == 0) return one(p_, zero_ ? 1 : prec_);
    if (k < 0) return inverse().pow(-k);
    if (zero_) {
        long lb = valuation_lower_bound();
        long total = kInfinitePrecision;
        if (lb < kInfinitePrecision) {
            total = lb;
            for (long i = 1; i < k && total < kInfinitePrecision; ++i) total = sat_add(total, lb);
        }
        return PAdic(p_, total);
    }
    PAdic base = *this;
    PAdic acc = one(p_, prec_);
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1ul) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

PAdic PAdic::capped_abs_precision(long m) const {
    if (abs_precision() <= m) return *this;
    if (zero_) return PAdic(p_, m);
    const long rel = m - val_;
    if (rel <= 0) return PAdic(p_, m);
    const BigInt mod = big_pow(p_, static_cast<unsigned long>(rel));
    BigInt u = unit_ % mod;
    if (u == 0) return PAdic(p_, m);  // cannot happen for rel >= 1, unit coprime to p
    return PAdic(p_, val_, static_cast<int>(rel), std::move(u));
}

std::vector<long> PAdic::unit_digits() const {
    if (zero_) throw PrecisionError("PAdic: zero value has no unit digits");
    std::vector<long> out;
    out.reserve(static_cast<size_t>(prec_));
    BigInt u = unit_;
    for (int i = 0; i < prec_; ++i) {
        const BigInt d = u % p_;
        out.push_back(d.get_si());
        u /= p_;
    }
    return out;
}

std::string PAdic::to_string() const {
    std::ostringstream os;
    if (zero_) {
        if (is_exact_zero()) return "0";
        os << "O(" << p_ << "^" << abs_prec_ << ")";
        return os.str();
    }
    const std::vector<long> d = unit_digits();
    bool first = true;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const long e = val_ + static_cast<long>(i);
        if (e == 0) {
            os << d[i];
        } else if (e == 1) {
            os << d[i] << "*" << p_;
        } else {
            os << d[i] << "*" << p_ << "^" << e;
        }
    }
    if (first) os << "0";
    os << " + O(" << p_ << "^" << abs_precision() << ")";
    return os.str();
}

bool congruent_mod(const PAdic& a, const PAdic& b, long m) {
    if (a.p() != b.p()) throw std::invalid_argument("congruent_mod: mixed primes");
    if (a.abs_precision() < m || b.abs_precision() < m)
        throw PrecisionError("congruent_mod: operands not known to absolute precision " +
                             std::to_string(m));
    const PAdic d = a - b;
    return d.valuation_lower_bound() >= m;
}

PAdic teichmuller(const BigInt& x, long p, int prec) {
    if (x % p == 0) throw std::invalid_argument("teichmuller: p divides x");
    const BigInt mod = big_pow(p, static_cast<unsigned long>(prec));
    BigInt w = x % mod;
    if (w < 0) w += mod;
    const BigInt bp(p);
    for (int i = 0; i <= prec + 1; ++i) {
        BigInt next = mod_pow(w, bp, mod);
        if (next == w) return PAdic::from_integer(w, p, prec);
        w = std::move(next);
    }
    throw std::logic_error("teichmuller: iteration failed to stabilize");
}

PAdic teichmuller(const PAdic& x) {
    if (x.is_zero() || x.valuation() != 0)
        throw std::invalid_argument("teichmuller: argument must be a unit");
    return teichmuller(x.unit(), x.p(), x.precision());
}

PAdic angle_bracket(const PAdic& x) {
    if (x.is_zero() || x.valuation() != 0)
        throw std::invalid_argument("angle_bracket: argument must be a unit");
    return x * teichmuller(x).inverse();
}

PAdic unit_pow(const PAdic& base, const PAdic& exponent) {
    if (base.p() != exponent.p()) throw std::invalid_argument("unit_pow: mixed primes");
    const long p = base.p();
    if (base.is_zero() || base.valuation() != 0)
        throw std::invalid_argument("unit_pow: base must be a unit");
    const int prec = base.precision();
    const PAdic y = base - PAdic::one(p, prec);  // v(y) >= 1 when base ≡ 1 mod p
    if (!y.is_zero() && y.valuation() < 1)
        throw std::invalid_argument("unit_pow: base must be ≡ 1 mod p");
    if (!exponent.is_zero() && exponent.valuation() < 0)
        throw std::invalid_argument("unit_pow: exponent must be a p-adic integer");
    if (y.is_zero()) return PAdic::one(p, prec);

    // sum_i binom(exponent, i) y^i; term i has valuation >= i - v_p(i!),
    // which exceeds any fixed precision once i is large enough.
    const long target = static_cast<long>(prec) + 2;
    long imax = 1;
    while (imax - factorial_valuation(static_cast<unsigned long>(imax), p) <= target) ++imax;

    PAdic acc = PAdic::one(p, prec);
    PAdic term = PAdic::one(p, prec);
    for (long i = 1; i <= imax; ++i) {
        const PAdic factor = exponent - PAdic::from_integer(i - 1, p, prec);
        term = term * factor * y;
        // exact division by i (binomial coefficients of a p-adic integer are
        // p-adic integers; the intermediate may transiently lose valuation)
        term = term * PAdic::from_integer(i, p, prec).inverse();
        acc += term;
    }
    return acc;
}

long factorial_valuation(unsigned long n, long p) {
    if (p < 2) throw std::invalid_argument("factorial_valuation: p must be >= 2");
    long total = 0;
    unsigned long q = n;
    while (q > 0) {
        q /= static_cast<unsigned long>(p);
        total += static_cast<long>(q);
    }
    return total;
}

namespace {
long multiplicative_order(long x, long p) {
    long acc = 1;
    for (long k = 1; k <= p - 1; ++k) {
        acc = static_cast<long>((static_cast<long long>(acc) * x) % p);
        if (acc == 1) return k;
    }
    return 0;
}
}  // namespace

long EmbeddingChoice::residue_for(long order, long p) const {
    if (auto it = root_residue.find(order); it != root_residue.end()) {
        const long r = ((it->second % p) + p) % p;
        if (r == 0 || multiplicative_order(r, p) != order)
            throw std::invalid_argument("EmbeddingChoice: residue " + std::to_string(it->second) +
                                        " does not have multiplicative order " + std::to_string(order) +
                                        " mod " + std::to_string(p));
        return r;
    }
    for (long x = 1; x < p; ++x)
        if (multiplicative_order(x, p) == order) return x;
    throw EmbeddingError("no residue of multiplicative order " + std::to_string(order) +
                         " mod " + std::to_string(p));
}

PAdic embed_cyclotomic(const Cyclotomic& a, long p, int prec, const EmbeddingChoice& choice) {
    if (a.is_rational()) return PAdic::from_rational(a.as_rational(), p, prec);
    const long n = a.order();
    if ((p - 1) % n != 0)
        throw EmbeddingError("Q(zeta_" + std::to_string(n) + ") has no embedding into Q_" +
                             std::to_string(p) + ": order does not divide p-1");
    const PAdic root = teichmuller(BigInt(choice.residue_for(n, p)), p, prec);
    PAdic acc = PAdic::exact_zero(p);
    PAdic power = PAdic::one(p, prec);
    const auto& cs = a.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) power *= root;
        if (cs[i].is_zero()) continue;
        acc += PAdic::from_rational(cs[i], p, prec) * power;
    }
    return acc;
}

}  // namespace tzeta
