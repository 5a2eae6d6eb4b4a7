#pragma once

#include "tzeta/multi_index.hpp"
#include "tzeta/padic.hpp"
#include "tzeta/zeta_spec.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tzeta {

/// Z(Q, P_1..P_T, mu, -k) by the finite double sum
///   mu^1/(1-mu)^1 * sum_l (1-mu)^{-l} sum_{j<=l} (-1)^{|j|} C(l,j) Q(-j) prod_t P_t(-j)^{k_t},
/// with l ranging over prod_n {0..D_n}, D_n = deg_{X_n}(Q prod P_t^{k_t}).
/// Exact in Q(mu); agrees with z_value_at_negative. Rational coefficients are
/// fine here; integrality only matters for the p-adic path.
Cyclotomic theorem4_value(const ZetaSpec& spec, const MultiIndex& k);

struct PAdicContext {
    long p = 5;
    int precision = 16;
    EmbeddingChoice embedding{};
};

struct PAdicHypothesisReport {
    struct PerBase {
        bool integer_coefficients = true;
        bool unit_values = true;  // p never divides P_t(j)
        std::optional<std::vector<long>> offending_residue;
    };
    struct PerTwist {
        long order = 1;
        bool nontrivial = true;        // mu != 1
        bool order_divides = true;     // order | p-1
        bool norm_ok = true;           // |1-mu|_p = 1 > p^{-1/(p-1)}
    };

    bool p_ok = true;              // p >= 3 and prime
    bool precision_ok = true;      // M >= 1
    bool weight_integral = true;   // Q has integer coefficients
    bool residues_ok = true;       // r_t in [0, p-1]
    std::vector<PerBase> per_base;
    std::vector<PerTwist> per_twist;

    bool all_ok() const;
    std::string format() const;
};

/// Exhaustive residue scan of p | P_t(j) over (Z/p)^N plus the integrality,
/// twist-order and norm checks behind Theorem 5's hypotheses.
PAdicHypothesisReport check_padic_hypotheses(const ZetaSpec& spec, const PAdicContext& ctx,
                                             std::span<const long> residues = {});

/// Thrown by PAdicSpec when the hypotheses fail; carries the full report.
struct HypothesisError : std::runtime_error {
    HypothesisError(std::string what, PAdicHypothesisReport rep)
        : std::runtime_error(std::move(what)), report(std::move(rep)) {}
    PAdicHypothesisReport report;
};

/// A ZetaSpec admissible for p-adic interpolation: integer coefficients,
/// twist orders dividing p-1, and every P_t a unit on (Z/p)^N, together with
/// a residue vector r in {0..p-1}^T selecting the interpolation branch.
class PAdicSpec {
public:
    PAdicSpec(ZetaSpec spec, PAdicContext ctx, std::vector<long> residues);

    const ZetaSpec& spec() const { return spec_; }
    const PAdicContext& context() const { return ctx_; }
    const std::vector<long>& residues() const { return residues_; }

private:
    ZetaSpec spec_;
    PAdicContext ctx_;
    std::vector<long> residues_;
};

/// One summand of the interpolating series:
///   Z_l^r(s) = (1-mu)^{-l} sum_{j<=l} (-1)^{|j|} C(l,j) Q(-j)
///              prod_t w(P_t(-j))^{r_t} <P_t(-j)>^{-s_t}.
/// l has length N, s length T (p-adic integers).
PAdic z_ell_r(const PAdicSpec& pspec, const MultiIndex& ell, std::span<const PAdic> s);

/// Z_p^r(s) = mu^1/(1-mu)^1 sum_l Z_l^r(s), truncated by Legendre's bound:
/// terms with sum_n v_p(l_n!) >= m are dropped (tail norm <= p^{-m}), so the
/// result is guaranteed to absolute precision m. Contract: m <= context
/// precision.
PAdic zp_r_eval(const PAdicSpec& pspec, std::span<const PAdic> s, long target_m);

/// Convenience entry: s = (-k_1, ..., -k_T).
PAdic zp_r_eval_at_minus_k(const PAdicSpec& pspec, const MultiIndex& k, long target_m);

}  // namespace tzeta
