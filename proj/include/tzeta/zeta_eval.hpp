#pragma once

#include "tzeta/cyclotomic.hpp"
#include "tzeta/multi_index.hpp"
#include "tzeta/zeta_spec.hpp"

#include <utility>
#include <vector>

namespace tzeta {

/// zeta_mu(-k) in closed form:
///   (-1)^k mu/(1-mu) * sum_{l=0}^{k} l! S(k,l) / (mu-1)^l.
/// Exact element of Q(mu). Throws std::domain_error for mu = 1 (pole).
Cyclotomic zeta_mu_neg(const Cyclotomic& mu, unsigned k);

/// Z(Q, P_1..P_T, mu, -k_1..-k_T) by expanding Q prod P_t^{k_t} and summing
/// a_alpha prod_n zeta_{mu_n}(-alpha_n) over the support.
Cyclotomic z_value_at_negative(const ZetaSpec& spec, const MultiIndex& k);

/// Absorb the trailing T - keep factors into the weight:
/// Q' = Q prod_{t > keep} P_t^{k_t}. Preserves z_value_at_negative.
/// Contract: 1 <= keep <= T - 1.
std::pair<ZetaSpec, MultiIndex> reduce_tail(const ZetaSpec& spec, const MultiIndex& k, int keep);

struct ExchangeInput {
    RationalPolynomial weight;                 // Q
    std::vector<RationalPolynomial> bases;     // P_1..P_T
    std::vector<unsigned> base_exponents;      // k_1..k_T
    std::vector<RationalPolynomial> swapped;   // Q_1..Q_{T'}
    std::vector<unsigned> swapped_exponents;   // l_1..l_{T'}
    std::vector<Cyclotomic> twists;
};

struct ExchangeResult {
    Cyclotomic lhs;  // Z(Q prod Q_t^{l_t}, P_1..P_T, mu, -k)
    Cyclotomic rhs;  // Z(Q prod P_t^{k_t}, Q_1..Q_{T'}, mu, -l)
    bool equal;
};

/// Both sides of the exchange identity, evaluated independently.
ExchangeResult verify_exchange(const ExchangeInput& input);

}  // namespace tzeta
