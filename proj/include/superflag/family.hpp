#pragma once

#include "root.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace superflag {

// A(n|m) = sl(n|m) (psl variant when n = m), B(n,m) = osp(2n+1|2m),
// C(m) = osp(2|2m) (stored with n = 1), D(n,m) = osp(2n|2m),
// P(n) periplectic, Q(n) queer.
enum class Family { A, B, C, D, P, Q };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::P: return "P";
        case Family::Q: return "Q";
    }
    return "?";
}

struct FamilyDescriptor {
    Family fam = Family::A;
    int n = 1;
    int m = 0;
    bool psl = false;

    // ranks of the x / y coordinate blocks of the weight lattice
    int xr() const { return n; }
    int yr() const { return (fam == Family::P || fam == Family::Q) ? 0 : m; }

    std::string name() const {
        std::string s = family_name(fam);
        switch (fam) {
            case Family::A:
                s += "(" + std::to_string(n) + "|" + std::to_string(m) + ")";
                if (psl) s += "-psl";
                break;
            case Family::C: s += "(" + std::to_string(m) + ")"; break;
            case Family::B:
            case Family::D:
                s += "(" + std::to_string(n) + "," + std::to_string(m) + ")";
                break;
            case Family::P:
            case Family::Q: s += "(" + std::to_string(n) + ")"; break;
        }
        return s;
    }

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

inline void check_family(const FamilyDescriptor& f) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(f.name() + ": " + why);
    };
    switch (f.fam) {
        case Family::A:
            if (f.n < 1 || f.m < 0) fail("need n >= 1, m >= 0");
            if (f.psl && (f.n != f.m || f.n < 2)) fail("psl variant needs n = m >= 2");
            break;
        case Family::B:
            if (f.n < 1 || f.m < 1) fail("need n >= 1, m >= 1");
            break;
        case Family::C:
            if (f.n != 1 || f.m < 1) fail("need m >= 1 (n is fixed to 1)");
            break;
        case Family::D:
            if (f.n < 2 || f.m < 1) fail("need n >= 2, m >= 1");
            break;
        case Family::P:
            if (f.n < 3) fail("need n >= 3");
            break;
        case Family::Q:
            if (f.n < 2) fail("need n >= 2");
            break;
    }
    if (f.psl && f.fam != Family::A) fail("psl variant only exists for family A");
}

namespace detail {
inline Weight ex(const FamilyDescriptor& f, int i) { // x_i, 1-based
    Weight w = Weight::zero(f.xr(), f.yr());
    w.x[i - 1] = 1;
    return w;
}
inline Weight ey(const FamilyDescriptor& f, int j) { // y_j, 1-based
    Weight w = Weight::zero(f.xr(), f.yr());
    w.y[j - 1] = 1;
    return w;
}
} // namespace detail

// The full root set, canonically sorted.
inline std::vector<Root> build_roots(const FamilyDescriptor& f) {
    check_family(f);
    using detail::ex;
    using detail::ey;
    std::vector<Root> out;
    auto even = [&](const Weight& w) { out.push_back({w, Parity::even}); };
    auto odd = [&](const Weight& w) { out.push_back({w, Parity::odd}); };
    const int n = f.n, m = f.m;

    switch (f.fam) {
        case Family::A:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) even(ex(f, i) - ex(f, j));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (i != j) even(ey(f, i) - ey(f, j));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j) {
                    odd(ex(f, i) - ey(f, j));
                    odd(ey(f, j) - ex(f, i));
                }
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            even(Rat(si) * ex(f, i) + Rat(sj) * ex(f, j));
            for (int i = 1; i <= n; ++i)
                for (int s : {1, -1}) even(Rat(s) * ex(f, i));
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            even(Rat(si) * ey(f, i) + Rat(sj) * ey(f, j));
            for (int j = 1; j <= m; ++j)
                for (int s : {1, -1}) even(Rat(2 * s) * ey(f, j));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            odd(Rat(si) * ex(f, i) + Rat(sj) * ey(f, j));
            for (int j = 1; j <= m; ++j)
                for (int s : {1, -1}) odd(Rat(s) * ey(f, j));
            break;
        case Family::C:
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            even(Rat(si) * ey(f, i) + Rat(sj) * ey(f, j));
            for (int j = 1; j <= m; ++j)
                for (int s : {1, -1}) even(Rat(2 * s) * ey(f, j));
            for (int j = 1; j <= m; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1})
                        odd(Rat(si) * ex(f, 1) + Rat(sj) * ey(f, j));
            break;
        case Family::D:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            even(Rat(si) * ex(f, i) + Rat(sj) * ex(f, j));
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            even(Rat(si) * ey(f, i) + Rat(sj) * ey(f, j));
            for (int j = 1; j <= m; ++j)
                for (int s : {1, -1}) even(Rat(2 * s) * ey(f, j));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1})
                            odd(Rat(si) * ex(f, i) + Rat(sj) * ey(f, j));
            break;
        case Family::P:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) even(ex(f, i) - ex(f, j));
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) odd(ex(f, i) + ex(f, j));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) odd(-(ex(f, i) + ex(f, j)));
            break;
        case Family::Q:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) out.push_back({ex(f, i) - ex(f, j), Parity::both});
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains_root(const std::vector<Root>& sorted, const Root& r) {
    return std::binary_search(sorted.begin(), sorted.end(), r);
}

// Sigma = -Sigma holds for every family except P.
inline bool symmetric_root_set(const FamilyDescriptor& f) { return f.fam != Family::P; }

} // namespace superflag
