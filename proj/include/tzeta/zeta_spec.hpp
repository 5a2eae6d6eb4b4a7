#pragma once

#include "tzeta/cyclotomic.hpp"
#include "tzeta/polynomial.hpp"

#include <memory>
#include <vector>

namespace tzeta {

struct HypothesisReport;

/// A validated problem instance for the twisted series
///   Z(Q, P_1..P_T, mu, s) = sum_{m >= 1} mu^m Q(m) prod_t P_t(m)^{-s_t}.
/// Twists are normalized to the lcm of their cyclotomic orders on
/// construction; every twist must be a root of unity different from 1.
class ZetaSpec {
public:
    ZetaSpec(RationalPolynomial weight, std::vector<RationalPolynomial> bases,
             std::vector<Cyclotomic> twists);

    int nvars() const { return weight_.nvars(); }
    int num_bases() const { return static_cast<int>(bases_.size()); }
    const RationalPolynomial& weight() const { return weight_; }
    const std::vector<RationalPolynomial>& bases() const { return bases_; }
    /// All at common_order().
    const std::vector<Cyclotomic>& twists() const { return twists_; }
    long common_order() const { return common_order_; }

    /// Sampled positivity / HDF / growth status of the instance (advisory,
    /// default sampling plan). Computed on first use and cached; cheap to
    /// share across copies.
    const HypothesisReport& advisory() const;

private:
    struct AdvisoryCache;

    RationalPolynomial weight_;
    std::vector<RationalPolynomial> bases_;
    std::vector<Cyclotomic> twists_;
    long common_order_;
    std::shared_ptr<AdvisoryCache> advisory_cache_;
};

}  // namespace tzeta
