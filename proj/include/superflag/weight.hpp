#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace superflag {

// Functional on the diagonal torus, coordinates over the basis x_1..x_n | y_1..y_m.
struct Weight {
    std::vector<Rat> x, y;

    static Weight zero(std::size_t n, std::size_t m) {
        return Weight{std::vector<Rat>(n), std::vector<Rat>(m)};
    }

    bool is_zero() const {
        auto z = [](const Rat& r) { return r == 0; };
        return std::all_of(x.begin(), x.end(), z) && std::all_of(y.begin(), y.end(), z);
    }

    friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
    assert(a.x.size() == b.x.size() && a.y.size() == b.y.size());
    Weight r = a;
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
    for (std::size_t j = 0; j < r.y.size(); ++j) r.y[j] += b.y[j];
    return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    assert(a.x.size() == b.x.size() && a.y.size() == b.y.size());
    Weight r = a;
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
    for (std::size_t j = 0; j < r.y.size(); ++j) r.y[j] -= b.y[j];
    return r;
}

inline Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& v : r.x) v = -v;
    for (auto& v : r.y) v = -v;
    return r;
}

inline Weight operator*(const Rat& c, const Weight& a) {
    Weight r = a;
    for (auto& v : r.x) v *= c;
    for (auto& v : r.y) v *= c;
    return r;
}

// Indefinite bilinear form: positive on the x-block, negative on the y-block.
inline Rat inner(const Weight& a, const Weight& b) {
    assert(a.x.size() == b.x.size() && a.y.size() == b.y.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
    for (std::size_t j = 0; j < a.y.size(); ++j) s -= a.y[j] * b.y[j];
    return s;
}

// Natural pairing: the functional a applied to the coweight xi (no sign on y).
inline Rat eval(const Weight& a, const Weight& xi) {
    assert(a.x.size() == xi.x.size() && a.y.size() == xi.y.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * xi.x[i];
    for (std::size_t j = 0; j < a.y.size(); ++j) s += a.y[j] * xi.y[j];
    return s;
}

inline int cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

inline int cmp(const Weight& a, const Weight& b) {
    if (a.x.size() != b.x.size()) return a.x.size() < b.x.size() ? -1 : 1;
    if (a.y.size() != b.y.size()) return a.y.size() < b.y.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (int c = cmp(a.x[i], b.x[i])) return c;
    for (std::size_t j = 0; j < a.y.size(); ++j)
        if (int c = cmp(a.y[j], b.y[j])) return c;
    return 0;
}

inline bool operator<(const Weight& a, const Weight& b) { return cmp(a, b) < 0; }

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.x.size(); ++i) {
        if (i) s += ",";
        s += rat_str(w.x[i]);
    }
    s += "|";
    for (std::size_t j = 0; j < w.y.size(); ++j) {
        if (j) s += ",";
        s += rat_str(w.y[j]);
    }
    return s + ")";
}

} // namespace superflag
