#pragma once

#include "tzeta/bigint.hpp"
#include "tzeta/multi_index.hpp"

#include <mutex>
#include <vector>

namespace tzeta {

/// Monotonically grown cache of Stirling numbers of the second kind,
/// S(k, l) = number of partitions of a k-set into l blocks. Reads are
/// synchronized: concurrent callers see identical values.
class StirlingTable {
public:
    BigInt get(unsigned k, unsigned l);

private:
    void grow_locked(unsigned k);

    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[k][l], 0 <= l <= k
};

/// S(k, l) via the recurrence S(k+1, l) = l S(k, l) + S(k, l-1), memoized
/// in a shared table.
BigInt stirling2(unsigned k, unsigned l);

/// S(k, l) via the explicit alternating sum (1/l!) sum_j (-1)^{l-j} C(l,j) j^k,
/// with 0^0 = 1. Cross-check route, independent of the recurrence.
BigInt stirling2_explicit(unsigned k, unsigned l);

BigInt binomial(unsigned long n, unsigned long k);

/// Componentwise product of binomials; 0 as soon as some j_n > l_n.
BigInt multi_binomial(const MultiIndex& l, const MultiIndex& j);

BigInt factorial(unsigned long n);

}  // namespace tzeta
