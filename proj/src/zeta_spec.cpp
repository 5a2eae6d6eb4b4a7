#include "tzeta/zeta_spec.hpp"

#include "tzeta/hypotheses.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tzeta {

struct ZetaSpec::AdvisoryCache {
    std::once_flag once;
    std::unique_ptr<const HypothesisReport> report;
};

ZetaSpec::ZetaSpec(RationalPolynomial weight, std::vector<RationalPolynomial> bases,
                   std::vector<Cyclotomic> twists)
    : weight_(std::move(weight)),
      bases_(std::move(bases)),
      twists_(std::move(twists)),
      common_order_(1),
      advisory_cache_(std::make_shared<AdvisoryCache>()) {
    if (bases_.empty()) throw std::invalid_argument("ZetaSpec: need at least one base polynomial");
    for (const auto& b : bases_) {
        if (b.nvars() != weight_.nvars())
            throw std::invalid_argument("ZetaSpec: all polynomials must share nvars");
        if (b.is_zero())
            throw std::invalid_argument("ZetaSpec: base polynomials must be nonzero");
    }
    if (static_cast<int>(twists_.size()) != weight_.nvars())
        throw std::invalid_argument("ZetaSpec: need one twist per variable");
    for (auto& mu : twists_) {
        if (!mu.is_root_of_unity())
            throw std::invalid_argument(
                "ZetaSpec: exact mode supports only root-of-unity twists "
                "(unit-modulus non-roots live in the float summation path)");
        common_order_ = std::lcm(common_order_, mu.order());
    }
    for (auto& mu : twists_) {
        mu = mu.embedded(common_order_);
        if (mu.is_one())
            throw std::invalid_argument("ZetaSpec: every twist must differ from 1");
    }
}

const HypothesisReport& ZetaSpec::advisory() const {
    std::call_once(advisory_cache_->once, [this] {
        advisory_cache_->report =
            std::make_unique<const HypothesisReport>(check_hypotheses(*this));
    });
    return *advisory_cache_->report;
}

}  // namespace tzeta
