#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "chordlab/diagram.hpp"

namespace chordlab {

/// A formal integer linear combination of chord diagrams. Zero coefficients
/// are never stored, so two elements are equal iff their term maps are.
class ModuleElement {
public:
    using Terms = std::map<CanonicalDiagram, std::int64_t>;

    ModuleElement() = default;

    void add_term(const CanonicalDiagram& x, std::int64_t coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(x, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t coeff(const CanonicalDiagram& x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? 0 : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (const auto& [x, c] : o.terms_) add_term(x, c);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        for (const auto& [x, c] : o.terms_) add_term(x, -c);
        return *this;
    }
    ModuleElement& operator*=(std::int64_t k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [x, c] : terms_) c *= k;
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(std::int64_t k, ModuleElement e) { return e *= k; }

    /// Scaled by +-1 so the coefficient of the smallest diagram is positive.
    ModuleElement sign_normalized() const {
        ModuleElement out = *this;
        if (!terms_.empty() && terms_.begin()->second < 0) out *= -1;
        return out;
    }

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
    friend bool operator<(const ModuleElement& a, const ModuleElement& b) {
        return a.terms_ < b.terms_;
    }

private:
    Terms terms_;
};

/// Indicator of the class x, extended linearly: the coefficient of x in e.
inline std::int64_t tilde_eval(const CanonicalDiagram& x, const ModuleElement& e) {
    return e.coeff(x);
}

inline std::string to_string(const ModuleElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [x, c] : e.terms()) {
        if (!first) s += "  ";
        first = false;
        s += (c >= 0 ? "+" : "-") + std::to_string(c >= 0 ? c : -c) + "*[" + to_string(x.word()) + "]";
    }
    return s;
}

}  // namespace chordlab
