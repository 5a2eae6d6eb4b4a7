#include "tzeta/zeta_eval.hpp"

#include "tzeta/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace tzeta {

Cyclotomic zeta_mu_neg(const Cyclotomic& mu, unsigned k) {
    if (mu.is_one())
        throw std::domain_error("zeta_mu_neg: mu = 1 is the untwisted pole case");
    const long o = mu.order();
    const Cyclotomic one = Cyclotomic::one(o);
    const Cyclotomic u = (mu - one).inverse();  // 1/(mu-1)

    Cyclotomic sum = Cyclotomic::zero(o);
    Cyclotomic upow = one;
    for (unsigned l = 0; l <= k; ++l) {
        const BigInt c = factorial(l) * stirling2(k, l);
        if (c != 0) sum += Rational(c) * upow;
        if (l < k) upow *= u;
    }
    // (-1)^k mu/(1-mu) = (-1)^{k+1} mu u
    Cyclotomic out = mu * u * sum;
    if (k % 2 == 0) out = -out;
    return out;
}

Cyclotomic z_value_at_negative(const ZetaSpec& spec, const MultiIndex& k) {
    if (static_cast<int>(k.size()) != spec.num_bases())
        throw std::invalid_argument("z_value_at_negative: k must have length T");
    const long order = spec.common_order();
    const RationalPolynomial expansion =
        expand_product<Rational>(spec.weight(), spec.bases(), k.entries());
    Cyclotomic acc = Cyclotomic::zero(order);
    if (expansion.is_zero()) return acc;

    // zeta_{mu_n}(-j) for every exponent j that occurs, computed once
    std::vector<std::vector<Cyclotomic>> zeta_vals(static_cast<size_t>(spec.nvars()));
    for (int n = 0; n < spec.nvars(); ++n) {
        const unsigned dn = expansion.degree_in_var(n);
        auto& row = zeta_vals[static_cast<size_t>(n)];
        row.reserve(dn + 1);
        for (unsigned j = 0; j <= dn; ++j) row.push_back(zeta_mu_neg(spec.twists()[static_cast<size_t>(n)], j));
    }

    for (const auto& [alpha, a] : expansion.terms()) {
        Cyclotomic term = Cyclotomic(a, order);
        for (std::size_t n = 0; n < alpha.size(); ++n) term *= zeta_vals[n][alpha[n]];
        acc += term;
    }
    return acc;
}

std::pair<ZetaSpec, MultiIndex> reduce_tail(const ZetaSpec& spec, const MultiIndex& k, int keep) {
    const int T = spec.num_bases();
    if (static_cast<int>(k.size()) != T)
        throw std::invalid_argument("reduce_tail: k must have length T");
    if (keep < 1 || keep > T - 1)
        throw std::invalid_argument("reduce_tail: keep must satisfy 1 <= keep <= T-1");

    RationalPolynomial new_weight = spec.weight();
    for (int t = keep; t < T; ++t)
        new_weight *= spec.bases()[static_cast<size_t>(t)].pow(k[static_cast<size_t>(t)]);

    std::vector<RationalPolynomial> new_bases(spec.bases().begin(), spec.bases().begin() + keep);
    MultiIndex new_k(static_cast<size_t>(keep));
    for (int t = 0; t < keep; ++t) new_k[static_cast<size_t>(t)] = k[static_cast<size_t>(t)];
    return {ZetaSpec(std::move(new_weight), std::move(new_bases), spec.twists()), std::move(new_k)};
}

ExchangeResult verify_exchange(const ExchangeInput& input) {
    if (input.bases.empty() || input.swapped.empty())
        throw std::invalid_argument("verify_exchange: both families must be nonempty");
    if (input.bases.size() != input.base_exponents.size() ||
        input.swapped.size() != input.swapped_exponents.size())
        throw std::invalid_argument("verify_exchange: exponent lengths must match the families");

    RationalPolynomial lhs_weight = input.weight;
    for (std::size_t t = 0; t < input.swapped.size(); ++t)
        lhs_weight *= input.swapped[t].pow(input.swapped_exponents[t]);
    ZetaSpec lhs_spec(std::move(lhs_weight), input.bases, input.twists);

    RationalPolynomial rhs_weight = input.weight;
    for (std::size_t t = 0; t < input.bases.size(); ++t)
        rhs_weight *= input.bases[t].pow(input.base_exponents[t]);
    ZetaSpec rhs_spec(std::move(rhs_weight), input.swapped, input.twists);

    ExchangeResult out{
        z_value_at_negative(lhs_spec, MultiIndex(std::vector<unsigned>(input.base_exponents))),
        z_value_at_negative(rhs_spec, MultiIndex(std::vector<unsigned>(input.swapped_exponents))),
        false};
    out.equal = (out.lhs == out.rhs);
    return out;
}

}  // namespace tzeta
