#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tzeta {

/// Tuple of naturals indexing monomials, derivative orders and evaluation
/// tuples. Fixed length within any one context.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : e_(n, 0u) {}
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t n, std::size_t i) {
        MultiIndex m(n);
        m.e_.at(i) = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& entries() const { return e_; }

    unsigned long total_degree() const {
        unsigned long s = 0;
        for (unsigned x : e_) s += x;
        return s;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw std::invalid_argument("MultiIndex: length mismatch");
        MultiIndex out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
        return out;
    }

    /// Componentwise a <= b.
    friend bool dominates(const MultiIndex& b, const MultiIndex& a) {
        if (a.size() != b.size()) throw std::invalid_argument("MultiIndex: length mismatch");
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.e_[i] > b.e_[i]) return false;
        return true;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<unsigned> e_;
};

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const unsigned long da = a.total_degree();
        const unsigned long db = b.total_degree();
        if (da != db) return da < db;
        return a.entries() < b.entries();
    }
};

}  // namespace tzeta
