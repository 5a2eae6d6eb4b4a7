#include "tzeta/combinatorics.hpp"

#include <stdexcept>

namespace tzeta {

BigInt StirlingTable::get(unsigned k, unsigned l) {
    if (l > k) return BigInt(0);
    std::lock_guard<std::mutex> lock(mu_);
    if (rows_.size() <= k) grow_locked(k);
    return rows_[k][l];
}

void StirlingTable::grow_locked(unsigned k) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});  // S(0,0) = 1
    while (rows_.size() <= k) {
        const auto& prev = rows_.back();
        const unsigned kk = static_cast<unsigned>(rows_.size());
        std::vector<BigInt> row(kk + 1);
        row[0] = 0;
        for (unsigned l = 1; l <= kk; ++l) {
            BigInt v = l < prev.size() ? BigInt(static_cast<long>(l) * prev[l]) : BigInt(0);
            v += prev[l - 1];
            row[l] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

BigInt stirling2(unsigned k, unsigned l) {
    static StirlingTable table;
    return table.get(k, l);
}

BigInt stirling2_explicit(unsigned k, unsigned l) {
    BigInt sum(0);
    for (unsigned j = 0; j <= l; ++j) {
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), j, k);  // 0^0 = 1 under GMP, as required
        term *= binomial(l, j);
        if ((l - j) & 1u)
            sum -= term;
        else
            sum += term;
    }
    const BigInt lf = factorial(l);
    if (!mpz_divisible_p(sum.get_mpz_t(), lf.get_mpz_t()))
        throw std::logic_error("stirling2_explicit: alternating sum not divisible by l!");
    return sum / lf;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt multi_binomial(const MultiIndex& l, const MultiIndex& j) {
    if (l.size() != j.size()) throw std::invalid_argument("multi_binomial: length mismatch");
    BigInt out(1);
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (j[i] > l[i]) return BigInt(0);
        out *= binomial(l[i], j[i]);
    }
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace tzeta
