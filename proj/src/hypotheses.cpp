#include "tzeta/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tzeta {

namespace {

Polynomial<double> to_double_poly(const RationalPolynomial& p) {
    Polynomial<double> out(p.nvars());
    for (const auto& [exp, c] : p.terms()) out.add_term(exp, c.to_double());
    return out;
}

struct Ray {
    // x_n(t) = t + offset_n on growing axes, fixed_value elsewhere
    std::vector<int> offsets;   // -1 marks a frozen axis (kept at 1)
    std::string label;

    std::vector<double> point(double t) const {
        std::vector<double> x(offsets.size());
        for (std::size_t i = 0; i < offsets.size(); ++i)
            x[i] = offsets[i] < 0 ? 1.0 : t + offsets[i];
        return x;
    }
    bool grows(int axis) const { return offsets[static_cast<std::size_t>(axis)] >= 0; }
};

std::vector<Ray> make_rays(int nvars, const SamplingPlan& plan) {
    std::vector<Ray> rays;
    // coordinate rays: one variable grows, the rest pinned at 1
    for (int n = 0; n < nvars; ++n) {
        Ray r;
        r.offsets.assign(static_cast<std::size_t>(nvars), -1);
        r.offsets[static_cast<std::size_t>(n)] = 0;
        std::ostringstream os;
        for (int i = 0; i < nvars; ++i) {
            if (i) os << ", ";
            os << "x" << (i + 1) << (i == n ? " = t" : " = 1");
        }
        r.label = os.str();
        rays.push_back(std::move(r));
    }
    // shifted diagonals: x_n = t + c_n, c in {0,1}^N
    const std::size_t count = std::min<std::size_t>(std::size_t{1} << nvars, plan.max_diagonal_rays);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Ray r;
        r.offsets.resize(static_cast<std::size_t>(nvars));
        std::ostringstream os;
        for (int i = 0; i < nvars; ++i) {
            const int c = (mask >> i) & 1u ? 1 : 0;
            r.offsets[static_cast<std::size_t>(i)] = c;
            if (i) os << ", ";
            os << "x" << (i + 1) << " = t" << (c ? "+1" : "");
        }
        r.label = os.str();
        rays.push_back(std::move(r));
    }
    return rays;
}

// Least-squares slope of log|y| against log t; samples with t below fit_from
// are ignored so early transients do not mask the asymptotic exponent.
std::optional<double> fitted_log_slope(const std::vector<std::pair<double, double>>& samples,
                                       double fit_from) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [t, y] : samples) {
        if (t < fit_from) continue;
        const double ay = std::abs(y);
        pts.emplace_back(std::log(t), std::log(std::max(ay, 1e-300)));
    }
    if (pts.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) { mx += x; my += y; }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

// all alpha with 1 <= |alpha| <= max_degree
std::vector<MultiIndex> stencil(int nvars, unsigned max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(nvars));
    // odometer over {0..max_degree}^N filtered by total degree
    while (true) {
        const unsigned long d = cur.total_degree();
        if (d >= 1 && d <= max_degree) out.push_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < max_degree) {
                ++cur[i];
                for (std::size_t j = 0; j < i; ++j) cur[j] = 0;
                break;
            }
        }
        if (i == cur.size()) break;
    }
    return out;
}

}  // namespace

HypothesisReport check_hypotheses(const ZetaSpec& spec, const SamplingPlan& plan) {
    HypothesisReport report;
    const int nvars = spec.nvars();
    const std::vector<Ray> rays = make_rays(nvars, plan);
    const std::vector<MultiIndex> alphas = stencil(nvars, plan.stencil_degree);

    std::vector<Polynomial<double>> dbases;
    dbases.reserve(spec.bases().size());
    for (const auto& b : spec.bases()) dbases.push_back(to_double_poly(b));

    for (std::size_t t = 0; t < spec.bases().size(); ++t) {
        const RationalPolynomial& base = spec.bases()[t];
        HypothesisReport::PerBase pb;

        bool nonneg_coeffs = true;
        for (const auto& [exp, c] : base.terms())
            if (c.sign() < 0) { nonneg_coeffs = false; break; }
        const std::vector<Rational> ones(static_cast<std::size_t>(nvars), Rational(1));
        const bool positive_at_one = base.evaluate(ones) > Rational(0);
        pb.positive_exact = nonneg_coeffs && positive_at_one;

        if (!pb.positive_exact) {
            for (const Ray& ray : rays) {
                for (double tv : plan.parameters) {
                    const std::vector<double> x = ray.point(tv);
                    const double v = dbases[t].evaluate(x);
                    if (v <= 0.0) {
                        pb.positive = false;
                        if (!report.positivity_witness)
                            report.positivity_witness = PositivityWitness{static_cast<int>(t), x, v};
                    }
                }
            }
        }

        for (const MultiIndex& alpha : alphas) {
            const RationalPolynomial dvr = base.derivative(alpha);
            if (dvr.is_zero()) continue;
            const Polynomial<double> dv = to_double_poly(dvr);
            for (int axis = 0; axis < nvars; ++axis) {
                if (alpha[static_cast<std::size_t>(axis)] == 0) continue;
                for (const Ray& ray : rays) {
                    if (!ray.grows(axis)) continue;
                    std::vector<std::pair<double, double>> samples;
                    double last_ratio = 0.0;
                    for (double tv : plan.parameters) {
                        const std::vector<double> x = ray.point(tv);
                        const double pv = dbases[t].evaluate(x);
                        if (pv <= 0.0) continue;  // positivity problem, reported above
                        last_ratio = dv.evaluate(x) / pv;
                        samples.emplace_back(tv, last_ratio);
                    }
                    bool all_tiny = true;
                    for (const auto& [tv, r] : samples)
                        if (std::abs(r) > 1e-250) { all_tiny = false; break; }
                    if (all_tiny) continue;
                    const auto slope = fitted_log_slope(samples, plan.fit_from);
                    if (!slope) continue;
                    const double decay = -*slope;
                    if (decay < plan.min_decay_exponent) {
                        pb.hdf_consistent = false;
                        pb.hdf_failures.push_back(HdfFailure{static_cast<int>(t), alpha, axis,
                                                             ray.label, decay, last_ratio});
                    }
                }
            }
        }
        report.per_base.push_back(std::move(pb));
    }

    for (const Ray& ray : rays) {
        std::vector<std::pair<double, double>> samples;
        bool defined = true;
        for (double tv : plan.parameters) {
            const std::vector<double> x = ray.point(tv);
            double v = 1.0;
            for (const auto& b : dbases) v *= b.evaluate(x);
            if (v <= 0.0) { defined = false; break; }
            samples.emplace_back(tv, v);
        }
        if (!defined) {
            report.growth_ok = false;
            report.growth_failures.push_back(GrowthFailure{ray.label, 0.0});
            continue;
        }
        const auto slope = fitted_log_slope(samples, plan.fit_from);
        if (slope && *slope < plan.min_growth_exponent) {
            report.growth_ok = false;
            report.growth_failures.push_back(GrowthFailure{ray.label, *slope});
        }
    }

    return report;
}

std::string format_report(const HypothesisReport& report) {
    std::ostringstream os;
    for (std::size_t t = 0; t < report.per_base.size(); ++t) {
        const auto& pb = report.per_base[t];
        os << "P" << (t + 1) << ": positivity "
           << (pb.positive ? (pb.positive_exact ? "PASS (exact: nonnegative coefficients)" : "PASS (sampled)")
                           : "FAIL")
           << ", decay " << (pb.hdf_consistent ? "CONSISTENT" : "FAIL") << "\n";
        for (const auto& f : pb.hdf_failures) {
            os << "  non-decaying ratio: alpha=" << f.alpha.to_string() << " axis x"
               << (f.axis + 1) << " along " << f.ray << " (fitted exponent "
               << f.fitted_exponent << ", ratio " << f.last_ratio << " at largest sample)\n";
        }
    }
    if (report.positivity_witness) {
        const auto& w = *report.positivity_witness;
        os << "  non-positive sample: P" << (w.base_index + 1) << "(";
        for (std::size_t i = 0; i < w.point.size(); ++i) {
            if (i) os << ", ";
            os << w.point[i];
        }
        os << ") = " << w.value << "\n";
    }
    os << "product growth: " << (report.growth_ok ? "PASS" : "FAIL") << "\n";
    for (const auto& g : report.growth_failures)
        os << "  no growth along " << g.ray << " (fitted exponent " << g.fitted_exponent << ")\n";
    return os.str();
}

}  // namespace tzeta
