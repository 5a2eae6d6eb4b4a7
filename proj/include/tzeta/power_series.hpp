#pragma once

#include <stdexcept>
#include <vector>

namespace tzeta {

/// Truncated formal power series with exact coefficients: c_0 + c_1 x + ...
/// + c_K x^K + O(x^{K+1}). The truncation order is explicit and arithmetic
/// truncates to the shorter operand.
template <typename C>
class PowerSeries {
public:
    explicit PowerSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("PowerSeries: need at least the constant term");
    }

    std::size_t order() const { return c_.size() - 1; }
    const C& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<C>& coeffs() const { return c_; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<C> out(a.c_.begin(), a.c_.begin() + static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i) out[i] += b.c_[i];
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<C> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            C acc = a.c_[0] * b.c_[k];
            for (std::size_t i = 1; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
            out.push_back(std::move(acc));
        }
        return PowerSeries(std::move(out));
    }

    /// Multiplicative inverse to the same truncation order; the constant
    /// term must be invertible.
    PowerSeries inverse() const {
        const C g0 = c_[0].inverse();
        std::vector<C> g;
        g.reserve(c_.size());
        g.push_back(g0);
        for (std::size_t m = 1; m < c_.size(); ++m) {
            C acc = c_[1] * g[m - 1];
            for (std::size_t i = 2; i <= m; ++i) acc += c_[i] * g[m - i];
            g.push_back(-(g0 * acc));
        }
        return PowerSeries(std::move(g));
    }

private:
    std::vector<C> c_;
};

}  // namespace tzeta
