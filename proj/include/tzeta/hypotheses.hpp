#pragma once

#include "tzeta/multi_index.hpp"
#include "tzeta/zeta_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tzeta {

/// Sampling plan for the advisory positivity / decay / growth checks.
/// The checks sample along coordinate rays (one variable grows, others stay
/// at 1) and along shifted diagonal rays x_n = t + c_n with offsets
/// c in {0,1}^N. They can refute the hypotheses on the sampled points but
/// can never prove them.
struct SamplingPlan {
    std::vector<double> parameters = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    unsigned stencil_degree = 3;      // derivative orders with |alpha| <= this
    double min_decay_exponent = 0.1;  // eps_min for the fitted decay of d^a P / P
    double min_growth_exponent = 0.1; // required fitted growth of prod P_t
    double fit_from = 8.0;            // slope fit uses samples with t >= this
    std::size_t max_diagonal_rays = 64;
};

struct HdfFailure {
    int base_index;           // which P_t
    MultiIndex alpha;         // derivative order
    int axis;                 // the n with alpha_n >= 1 whose decay failed
    std::string ray;          // human-readable ray description
    double fitted_exponent;   // fitted decay exponent (should be >= eps_min)
    double last_ratio;        // signed d^alpha P / P at the largest sample
};

struct PositivityWitness {
    int base_index;
    std::vector<double> point;
    double value;
};

struct GrowthFailure {
    std::string ray;
    double fitted_exponent;
};

struct HypothesisReport {
    struct PerBase {
        bool positive = true;           // no non-positive sample found
        bool positive_exact = false;    // certified by the all-coefficients->=0 shortcut
        bool hdf_consistent = true;
        std::vector<HdfFailure> hdf_failures;
    };

    std::vector<PerBase> per_base;
    std::optional<PositivityWitness> positivity_witness;
    bool growth_ok = true;  // sampled prod P_t grows along every ray
    std::vector<GrowthFailure> growth_failures;

    bool all_ok() const {
        for (const auto& b : per_base)
            if (!b.positive || !b.hdf_consistent) return false;
        return growth_ok;
    }
};

/// Advisory check of the positivity, decay and product-growth hypotheses on
/// the sampled grid. Never blocks evaluation; the report is informational.
HypothesisReport check_hypotheses(const ZetaSpec& spec, const SamplingPlan& plan = {});

std::string format_report(const HypothesisReport& report);

}  // namespace tzeta
