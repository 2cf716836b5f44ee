#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "krall_hahn/errors.hpp"

namespace kh {

// Strictly increasing finite set of integers.
using IntSet = std::vector<int>;

inline int set_max(const IntSet& f) { return f.empty() ? -1 : f.back(); }
inline int set_sum(const IntSet& f) {
    int s = 0;
    for (int v : f) s += v;
    return s;
}

inline std::string set_str(const IntSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
    return out + "}";
}

// Four finite sets of positive integers F1..F4 (empty allowed).
class FiniteSetQuartet {
public:
    FiniteSetQuartet() = default;

    static FiniteSetQuartet make(std::array<IntSet, 4> sets) {
        for (std::size_t i = 0; i < 4; ++i) {
            auto& f = sets[i];
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw ContextInvalid("finite-set", "F" + std::to_string(i + 1) + " has repeated elements");
            if (!f.empty() && f.front() < 1)
                throw ContextInvalid("finite-set", "F" + std::to_string(i + 1) + " must contain positive integers");
        }
        FiniteSetQuartet q;
        q.sets_ = std::move(sets);
        return q;
    }

    // i is 1-based.
    const IntSet& operator[](int i) const { return sets_.at(static_cast<std::size_t>(i - 1)); }
    int max(int i) const { return set_max((*this)[i]); }
    int card(int i) const { return static_cast<int>((*this)[i].size()); }
    bool empty(int i) const { return (*this)[i].empty(); }
    const std::array<IntSet, 4>& sets() const noexcept { return sets_; }

    friend bool operator==(const FiniteSetQuartet&, const FiniteSetQuartet&) = default;

private:
    std::array<IntSet, 4> sets_;
};

// I(F) = {1..f_k} \ {f_k - f : f in F}; I(empty) = empty.
inline IntSet involution_I(const IntSet& f) {
    if (f.empty()) return {};
    const int top = f.back();
    IntSet out;
    for (int v = 1; v <= top; ++v)
        if (std::find(f.begin(), f.end(), top - v) == f.end()) out.push_back(v);
    return out;
}

// J_h(F) = {0..f_k+h-1} \ {f-1 : f in F}; J_h(empty) = empty.
inline IntSet transform_J(int h, const IntSet& f) {
    if (h < 1) throw ContextInvalid("finite-set", "J_h needs h >= 1");
    if (f.empty()) return {};
    const int top = f.back() + h - 1;
    IntSet out;
    for (int v = 0; v <= top; ++v)
        if (std::find(f.begin(), f.end(), v + 1) == f.end()) out.push_back(v);
    return out;
}

}  // namespace kh
