#pragma once

#include "tzeta/bigint.hpp"
#include "tzeta/cyclotomic.hpp"
#include "tzeta/multi_index.hpp"
#include "tzeta/rational.hpp"

#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tzeta {

// Coefficient-ring glue so the polynomial template can work over Q, Q(zeta_n)
// or plain doubles without caring how each ring spells its constants.
template <typename C>
struct scalar_traits {
    static C zero(const C&) { return C(0); }
    static C one(const C&) { return C(1); }
    static bool is_zero(const C& c) { return c == C(0); }
    static C from_bigint(const BigInt& n, const C&) { return C(n); }
};

template <>
struct scalar_traits<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static Rational from_bigint(const BigInt& n, const Rational&) { return Rational(n); }
};

template <>
struct scalar_traits<Cyclotomic> {
    static Cyclotomic zero(const Cyclotomic& like) { return Cyclotomic::zero(like.order()); }
    static Cyclotomic one(const Cyclotomic& like) { return Cyclotomic::one(like.order()); }
    static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
    static Cyclotomic from_bigint(const BigInt& n, const Cyclotomic& like) {
        return Cyclotomic(Rational(n), like.order());
    }
};

template <>
struct scalar_traits<double> {
    static double zero(double) { return 0.0; }
    static double one(double) { return 1.0; }
    static bool is_zero(double c) { return c == 0.0; }
    static double from_bigint(const BigInt& n, double) { return n.get_d(); }
};

/// Sparse multivariate polynomial over an exact scalar ring. Terms are kept
/// in graded-lexicographic order with no zero coefficients, so iteration is
/// deterministic and equality is structural.
template <typename C>
class Polynomial {
public:
    using Terms = std::map<MultiIndex, C, GradedLexLess>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be >= 1");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, C value) {
        Polynomial p(nvars);
        p.add_term(MultiIndex(static_cast<std::size_t>(nvars)), std::move(value));
        return p;
    }

    static Polynomial monomial(MultiIndex exp, C coeff) {
        Polynomial p(static_cast<int>(exp.size()));
        p.add_term(std::move(exp), std::move(coeff));
        return p;
    }

    /// X_{i+1} with coefficient like `unit`.
    static Polynomial variable(int nvars, int i, const C& unit) {
        Polynomial p(nvars);
        p.add_term(MultiIndex::unit(static_cast<std::size_t>(nvars), static_cast<std::size_t>(i)),
                   unit);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(const MultiIndex& exp, const C& coeff) {
        if (static_cast<int>(exp.size()) != nvars_)
            throw std::invalid_argument("Polynomial: exponent length != nvars");
        if (scalar_traits<C>::is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (scalar_traits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    const C* find(const MultiIndex& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? nullptr : &it->second;
    }

    unsigned long total_degree() const {
        if (is_zero()) throw std::domain_error("Polynomial: degree of the zero polynomial");
        return terms_.rbegin()->first.total_degree();
    }

    /// max alpha_n over the support. Contract: nonzero polynomial.
    unsigned degree_in_var(int n) const {
        if (is_zero()) throw std::domain_error("Polynomial: degree of the zero polynomial");
        if (n < 0 || n >= nvars_) throw std::invalid_argument("Polynomial: variable index");
        unsigned d = 0;
        for (const auto& [exp, c] : terms_) d = std::max(d, exp[static_cast<std::size_t>(n)]);
        return d;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_nvars(a, b);
        Polynomial out = a;
        for (const auto& [exp, c] : b.terms_) out.add_term(exp, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_nvars(a, b);
        Polynomial out = a;
        for (const auto& [exp, c] : b.terms_) out.add_term(exp, -c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a.nvars_);
        for (const auto& [exp, c] : a.terms_) out.terms_.emplace(exp, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_nvars(a, b);
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend Polynomial operator*(const C& s, const Polynomial& a) {
        Polynomial out(a.nvars_);
        if (scalar_traits<C>::is_zero(s)) return out;
        for (const auto& [exp, c] : a.terms_) out.add_term(exp, s * c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
    Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }
    Polynomial& operator*=(const Polynomial& b) { *this = *this * b; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// p^k by binary exponentiation; p^0 = 1 for every p, including p = 0.
    Polynomial pow(unsigned long k) const {
        const C unit = terms_.empty() ? C(1) : scalar_traits<C>::one(terms_.begin()->second);
        Polynomial acc = constant(nvars_, unit);
        if (k == 0) return acc;
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1ul) acc *= base;
            k >>= 1;
            if (k > 0) base *= base;
        }
        return acc;
    }

    C evaluate(std::span<const C> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("Polynomial::evaluate: point length != nvars");
        // power tables per variable, up to the degree actually used
        std::vector<std::vector<C>> pows(point.size());
        for (std::size_t i = 0; i < point.size(); ++i) pows[i].push_back(scalar_traits<C>::one(point[i]));
        C acc = scalar_traits<C>::zero(point[0]);
        for (const auto& [exp, coeff] : terms_) {
            C term = coeff;
            for (std::size_t i = 0; i < point.size(); ++i) {
                const unsigned e = exp[i];
                auto& table = pows[i];
                while (table.size() <= e) table.push_back(table.back() * point[i]);
                if (e > 0) term *= table[e];
            }
            acc += term;
        }
        return acc;
    }

    /// d^alpha p: on a monomial X^gamma this is gamma!/(gamma-alpha)! X^{gamma-alpha},
    /// and 0 unless gamma >= alpha componentwise.
    Polynomial derivative(const MultiIndex& alpha) const {
        if (static_cast<int>(alpha.size()) != nvars_)
            throw std::invalid_argument("Polynomial::derivative: order length != nvars");
        Polynomial out(nvars_);
        for (const auto& [exp, coeff] : terms_) {
            if (!dominates(exp, alpha)) continue;
            BigInt scale(1);
            MultiIndex shifted(exp.size());
            for (std::size_t i = 0; i < exp.size(); ++i) {
                for (unsigned j = 0; j < alpha[i]; ++j) scale *= static_cast<long>(exp[i] - j);
                shifted[i] = exp[i] - alpha[i];
            }
            out.add_term(shifted, coeff * scalar_traits<C>::from_bigint(scale, coeff));
        }
        return out;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (static_cast<int>(names.size()) != nvars_)
            throw std::invalid_argument("Polynomial::to_string: name count != nvars");
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // highest grading first reads naturally
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::ostringstream body;
            bool has_var = false;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                const unsigned e = it->first[i];
                if (e == 0) continue;
                if (has_var) body << "*";
                has_var = true;
                body << names[i];
                if (e > 1) body << "^" << e;
            }
            std::string cs = coeff_to_display(it->second);
            bool negative = false;
            if (!cs.empty() && cs[0] == '-') {
                negative = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negative) os << "-";
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            const bool unit_coeff = (cs == "1");
            if (!has_var) {
                os << cs;
            } else if (unit_coeff) {
                os << body.str();
            } else {
                os << cs << "*" << body.str();
            }
        }
        return os.str();
    }

private:
    static void require_same_nvars(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_)
            throw std::invalid_argument("Polynomial: nvars mismatch (" + std::to_string(a.nvars_) +
                                        " vs " + std::to_string(b.nvars_) + ")");
    }

    static std::string coeff_to_display(const Rational& c) { return c.to_string(); }
    static std::string coeff_to_display(const Cyclotomic& c) { return "(" + c.to_string() + ")"; }
    static std::string coeff_to_display(double c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    int nvars_;
    Terms terms_;
};

/// Q * prod_t Ps[t]^{ks[t]}, the expansion whose coefficients drive the
/// values at negative tuples.
template <typename C>
Polynomial<C> expand_product(const Polynomial<C>& weight, std::span<const Polynomial<C>> bases,
                             std::span<const unsigned> exponents) {
    if (bases.empty() || bases.size() != exponents.size())
        throw std::invalid_argument("expand_product: need T >= 1 bases with matching exponents");
    Polynomial<C> acc = weight;
    for (std::size_t t = 0; t < bases.size(); ++t) {
        if (bases[t].nvars() != weight.nvars())
            throw std::invalid_argument("expand_product: nvars mismatch");
        acc *= bases[t].pow(exponents[t]);
    }
    return acc;
}

/// A derivative order alpha with alpha_n >= 1 making d^alpha p a nonzero
/// constant: among support elements with beta_n = deg_{X_n} p, take those of
/// maximal total degree, lexicographically smallest on ties.
/// Contract: p depends effectively on X_n.
template <typename C>
MultiIndex find_constant_partial(const Polynomial<C>& p, int n) {
    if (p.is_zero() || p.degree_in_var(n) == 0)
        throw std::invalid_argument("find_constant_partial: polynomial does not depend on X_" +
                                    std::to_string(n + 1));
    const unsigned dn = p.degree_in_var(n);
    const MultiIndex* best = nullptr;
    for (const auto& [exp, c] : p.terms()) {
        if (exp[static_cast<std::size_t>(n)] != dn) continue;
        if (!best || exp.total_degree() > best->total_degree() ||
            (exp.total_degree() == best->total_degree() && exp.entries() < best->entries()))
            best = &exp;
    }
    return *best;
}

using RationalPolynomial = Polynomial<Rational>;

}  // namespace tzeta
