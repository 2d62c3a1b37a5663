#pragma once

#include "flag.hpp"

#include <stdexcept>

namespace superflag {

struct FlagConvention {
    bool reverse_y = false;
    friend bool operator==(const FlagConvention&, const FlagConvention&) = default;
};

struct XiFunctional {
    Weight levels; // integer-valued coweight
};

namespace detail {
inline void require_valid(const FamilyDescriptor& f, const FlagType& d) {
    auto v = validate_flag_type(f, d);
    if (!v.ok())
        throw std::invalid_argument(f.name() + " delta [" + flag_str(d) + "] invalid: " +
                                    v.describe());
}
} // namespace detail

// Level counts per basis index. A and Q count the virtual full-space endpoint
// as well (harmless there: every root kills the all-ones coweight); the
// isotropic families count the listed steps only, anything else breaks the Levi.
inline XiFunctional xi_from_flag(const FamilyDescriptor& f, const FlagType& d,
                                 FlagConvention conv = {}) {
    detail::require_valid(f, d);
    if (f.fam == Family::P)
        throw std::logic_error("P(n) has no level functional; phi_sets uses its membership rules");
    std::vector<FlagStep> steps = d.steps;
    if (f.fam == Family::A || f.fam == Family::Q) steps.push_back(grid_max(f));
    const int n = f.xr(), m = f.yr();
    Weight xi = Weight::zero(n, m);
    for (int i = 1; i <= n; ++i)
        for (const auto& s : steps)
            if (s.d0 >= i) xi.x[i - 1] += 1;
    for (int j = 1; j <= m; ++j) {
        const int want = conv.reverse_y ? (m - j + 1) : j;
        for (const auto& s : steps)
            if (s.d1 >= want) xi.y[j - 1] += 1;
    }
    return {xi};
}

struct PhiSets {
    std::vector<Root> phi, phi_r, phi_n, phi_c; // all sorted
};

namespace detail {
// membership rules for the periplectic stabilizer; flag steps span
// e_1..e_d0 together with f_n..f_{n-d1+1}
inline bool p_in_phi(int n, const FlagType& d, const Root& r) {
    if (r.parity == Parity::even) {
        // x_a - x_b
        int ia = 0, ib = 0;
        for (int i = 0; i < n; ++i) {
            if (r.w.x[i] == 1) ia = i + 1;
            else if (r.w.x[i] == -1) ib = i + 1;
        }
        for (const auto& s : d.steps) {
            if (ia <= s.d0 && !(ib <= s.d0)) return false;
            if (n - ib + 1 <= s.d1 && !(n - ia + 1 <= s.d1)) return false;
        }
        return true;
    }
    // +-(x_a + x_b), a <= b, where -2x_a does not occur
    int a = 0, b = 0;
    bool plus = false;
    for (int i = 0; i < n; ++i) {
        if (r.w.x[i] == 0) continue;
        plus = r.w.x[i] > 0;
        if (r.w.x[i] == 2 || r.w.x[i] == -2) a = b = i + 1;
        else if (a == 0) a = i + 1;
        else b = i + 1;
    }
    if (b == 0) b = a;
    if (plus) {
        for (const auto& s : d.steps) {
            if (a <= s.d0 && !(n - b + 1 <= s.d1)) return false;
            if (b <= s.d0 && !(n - a + 1 <= s.d1)) return false;
        }
        return true;
    }
    for (const auto& s : d.steps) {
        if (n - a + 1 <= s.d1 && !(b <= s.d0)) return false;
        if (n - b + 1 <= s.d1 && !(a <= s.d0)) return false;
    }
    return true;
}
} // namespace detail

inline PhiSets phi_sets(const FamilyDescriptor& f, FlagConvention conv, const FlagType& d) {
    detail::require_valid(f, d);
    const auto sigma = build_roots(f);
    PhiSets out;
    if (f.fam == Family::P) {
        for (const auto& r : sigma)
            (detail::p_in_phi(f.n, d, r) ? out.phi : out.phi_c).push_back(r);
        for (const auto& r : out.phi) {
            Root neg{-r.w, r.parity};
            const bool levi = contains_root(sigma, neg) &&
                              std::binary_search(out.phi.begin(), out.phi.end(), neg);
            (levi ? out.phi_r : out.phi_n).push_back(r);
        }
        return out;
    }
    const auto xi = xi_from_flag(f, d, conv);
    for (const auto& r : sigma) {
        const Rat v = eval(r.w, xi.levels);
        if (v > 0) { out.phi_n.push_back(r); out.phi.push_back(r); }
        else if (v == 0) { out.phi_r.push_back(r); out.phi.push_back(r); }
        else out.phi_c.push_back(r);
    }
    return out;
}

} // namespace superflag
