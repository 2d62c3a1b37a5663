#pragma once

#include "realform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace superflag {

enum class H0Kind { constants, exterior, base_tensor_exterior, base_only };

inline const char* h0_kind_name(H0Kind k) {
    switch (k) {
        case H0Kind::constants: return "constants";
        case H0Kind::exterior: return "exterior";
        case H0Kind::base_tensor_exterior: return "base_tensor_exterior";
        case H0Kind::base_only: return "base_only";
    }
    return "?";
}

// symbolic H0(D, O): constants, an exterior algebra on k generators, or the
// function space of a classical factor tensored with such an algebra
struct H0Descriptor {
    H0Kind kind = H0Kind::constants;
    long long k = 0;
    std::string base_marker; // "D0" whole base, "D1" hermitian factor
    friend bool operator==(const H0Descriptor&, const H0Descriptor&) = default;

    static H0Descriptor constants() { return {}; }
    static H0Descriptor exterior(long long k) { return {H0Kind::exterior, k, {}}; }
    static H0Descriptor base_tensor(long long k, std::string marker) {
        return {H0Kind::base_tensor_exterior, k, std::move(marker)};
    }
    static H0Descriptor base_only(std::string marker) {
        return {H0Kind::base_only, 0, std::move(marker)};
    }

    std::string str() const {
        switch (kind) {
            case H0Kind::constants: return "C";
            case H0Kind::exterior: return "/\\ C^" + std::to_string(k);
            case H0Kind::base_tensor_exterior:
                return "H0(" + base_marker + ",F) (x) /\\ C^" + std::to_string(k);
            case H0Kind::base_only: return "H0(" + base_marker + ",F)";
        }
        return "?";
    }
};

// global functions on the flag supermanifold Z(delta) itself
inline H0Descriptor h0_flag_supermanifold(const FamilyDescriptor& f, const FlagType& d) {
    detail::require_valid(f, d);
    const long long n = f.n, m = f.m;
    switch (f.fam) {
        case Family::A:
            if (d.contains(f.n, 0) || d.contains(0, f.m)) return H0Descriptor::exterior(n * m);
            return H0Descriptor::constants();
        case Family::B:
        case Family::D: return H0Descriptor::constants();
        case Family::C:
            if (d.contains(1, 0)) return H0Descriptor::exterior(2 * m);
            return H0Descriptor::constants();
        case Family::P:
            if (d.contains(f.n, 0)) return H0Descriptor::exterior(n * (n + 1) / 2);
            if (d.contains(0, f.n) || d.contains(0, f.n - 1))
                return H0Descriptor::exterior(n * (n - 1) / 2);
            return H0Descriptor::constants();
        case Family::Q: return H0Descriptor::constants();
    }
    return H0Descriptor::constants();
}

namespace detail {

// smallest d0 of a step carrying y_j; the ambient endpoint n|m is appended so
// the minimum always exists
inline int dbar0(const FamilyDescriptor& f, const FlagType& d, int j) {
    int best = f.n;
    for (const auto& s : d.steps)
        if (s.d1 >= j) best = std::min(best, s.d0);
    return best;
}

inline int dbar1(const FamilyDescriptor& f, const FlagType& d, int i) {
    int best = f.m;
    for (const auto& s : d.steps)
        if (s.d0 >= i) best = std::min(best, s.d1);
    return best;
}

} // namespace detail

// the interlacing conditions governing sl(n|m,R)- and sl(k|l,H)-type domains
inline bool condition_I(const FamilyDescriptor& f, const FlagType& d) {
    if (f.fam != Family::A)
        throw std::invalid_argument("condition_I is defined for the A family only");
    detail::require_valid(f, d);
    for (int j = 1; j <= f.m; ++j)
        if (detail::dbar0(f, d, j) + detail::dbar0(f, d, f.m - j + 1) > f.n) return false;
    return true;
}

inline bool condition_II(const FamilyDescriptor& f, const FlagType& d) {
    if (f.fam != Family::A)
        throw std::invalid_argument("condition_II is defined for the A family only");
    detail::require_valid(f, d);
    for (int i = 1; i <= f.n; ++i)
        if (detail::dbar1(f, d, i) + detail::dbar1(f, d, f.n - i + 1) > f.m) return false;
    return true;
}

// declared geometry of the classical base D_0 = D_1 x D_2
struct BaseKind {
    enum class Tag { cycle_connected, hermitian, mixed };
    Tag tag = Tag::cycle_connected;
    int factor = 0; // mixed only: 1 = x-side factor hermitian, 2 = y-side

    static BaseKind cycle() { return {Tag::cycle_connected, 0}; }
    static BaseKind hermitian() { return {Tag::hermitian, 0}; }
    static BaseKind mixed(int which) { return {Tag::mixed, which}; }
    friend bool operator==(const BaseKind&, const BaseKind&) = default;

    static BaseKind parse(const std::string& s) {
        if (s == "cycle" || s == "cycle_connected") return cycle();
        if (s == "hermitian") return hermitian();
        if (s == "mixed:1") return mixed(1);
        if (s == "mixed:2") return mixed(2);
        throw std::invalid_argument("base kind must be cycle|hermitian|mixed:1|mixed:2, got '" +
                                    s + "'");
    }

    std::string str() const {
        switch (tag) {
            case Tag::cycle_connected: return "cycle";
            case Tag::hermitian: return "hermitian";
            case Tag::mixed: return "mixed:" + std::to_string(factor);
        }
        return "?";
    }
};

// whether the given classical factor of the even part admits a hermitian
// symmetric structure: factor 1 is the x-side group (SU(p,q), SO(p,q),
// SO*(2n), U(p,q) for Q), factor 2 the y-side (SU(r,s), the symplectic factor)
inline bool hermitian_capable(const FamilyDescriptor& f, const RealFormDescriptor& rf,
                              int factor) {
    const auto& pr = rf.params;
    switch (rf.table) {
        case TableKey::su:
            return factor == 1 ? pr[0] > 0 && pr[1] > 0 : pr[2] > 0 && pr[3] > 0;
        case TableKey::osp_even:
        case TableKey::osp_oo:
            if (factor == 1) return (pr[0] == 2 && pr[1] >= 1) || (pr[1] == 2 && pr[0] >= 1);
            // the real rows carry Sp(2m,R); the quaternionic Sp(2r,2s) of the
            // even rows is never hermitian
            return rf.kind == RealFormKind::real;
        case TableKey::osp_star:
            if (factor == 1) return f.fam == Family::D; // SO*(2n) needs n >= 2
            return rf.kind == RealFormKind::even_real;  // Sp(2m,R) in the even row only
        case TableKey::q_unitary: return factor == 1 && pr[0] > 0 && pr[1] > 0;
        default: return false;
    }
}

// H0(D, O) for a flag domain of the given real form, by the chapter tables;
// the caller declares the base geometry, the table row does the rest
inline H0Descriptor h0_flag_domain(const FamilyDescriptor& f, const RealFormDescriptor& rf,
                                   const FlagType& d, const BaseKind& base) {
    const auto ps = phi_sets(f, rf.conv, d);
    const auto sigma = build_roots(f);
    auto in_phi = [&](const Root& r) {
        return std::binary_search(ps.phi.begin(), ps.phi.end(), r);
    };

    // flag domains have maximal odd dimension; anything else is not open
    for (const auto& r : sigma)
        if (r.parity != Parity::even && !in_phi(r) && !in_phi(rf.tau(r)))
            throw std::invalid_argument(f.name() + " delta [" + flag_str(d) + "] for " + rf.key +
                                        ": positive odd codimension, not a flag domain");

    bool l1_zero = true;
    for (const auto& r : sigma)
        if (r.parity != Parity::even && in_phi(r) && in_phi(rf.tau(r))) {
            l1_zero = false;
            break;
        }

    const long long n = f.n, m = f.m;
    auto reject = [&]() {
        throw std::invalid_argument("base kind " + base.str() + " inconsistent with " + rf.key +
                                    " (" + rf.name + ")");
    };

    if (base.tag == BaseKind::Tag::cycle_connected) {
        switch (rf.table) {
            case TableKey::su:
            case TableKey::pq0:
                return l1_zero ? H0Descriptor::exterior(n * m) : H0Descriptor::constants();
            case TableKey::sl_real: {
                const bool c1 = condition_I(f, d), c2 = condition_II(f, d);
                if (c1 && c2) return H0Descriptor::exterior(n * m);
                if (c1 || c2) {
                    if ((n * m) % 2 != 0)
                        throw std::logic_error(f.name() + " [" + flag_str(d) +
                                               "]: half-rank case with odd n*m");
                    return H0Descriptor::exterior(n * m / 2);
                }
                return H0Descriptor::constants();
            }
            case TableKey::uspi:
            case TableKey::p_real:
            case TableKey::q_reversal:
            case TableKey::q_unitary: return H0Descriptor::constants();
            case TableKey::osp_even:
            case TableKey::osp_oo:
            case TableKey::osp_star: {
                if (f.fam == Family::C) {
                    if (rf.table == TableKey::osp_oo) { // Osp(1,1|2m)
                        if (d.contains(0, f.m)) return H0Descriptor::exterior(2 * m);
                        if (d.contains(1, f.m)) return H0Descriptor::exterior(m);
                        return H0Descriptor::constants();
                    }
                    return d.contains(1, 0) ? H0Descriptor::exterior(2 * m)
                                            : H0Descriptor::constants();
                }
                const long long full = (f.fam == Family::B ? 2 * n + 1 : 2 * n) * m;
                return l1_zero ? H0Descriptor::exterior(full) : H0Descriptor::constants();
            }
        }
        return H0Descriptor::constants();
    }

    if (base.tag == BaseKind::Tag::hermitian) {
        switch (rf.table) {
            case TableKey::su: {
                if (!hermitian_capable(f, rf, 1) && !hermitian_capable(f, rf, 2)) reject();
                const auto& pr = rf.params;
                const long long rank = (long long)pr[1] * pr[2] + (long long)pr[0] * pr[3];
                return H0Descriptor::base_tensor(rank, "D0");
            }
            case TableKey::osp_even:
            case TableKey::osp_oo:
                if (!hermitian_capable(f, rf, 1) || !hermitian_capable(f, rf, 2)) reject();
                return H0Descriptor::base_tensor(2 * m, "D0");
            case TableKey::osp_star:
                if (!hermitian_capable(f, rf, 1) || !hermitian_capable(f, rf, 2)) reject();
                return H0Descriptor::base_tensor(n * m, "D0");
            case TableKey::q_unitary:
                if (!hermitian_capable(f, rf, 1)) reject();
                return H0Descriptor::base_tensor((long long)rf.params[0] * rf.params[1], "D0");
            default: reject();
        }
        return H0Descriptor::constants();
    }

    if (base.factor != 1 && base.factor != 2) reject();
    if (!hermitian_capable(f, rf, base.factor)) reject();
    switch (rf.table) {
        case TableKey::su: {
            if (base.factor != 1) reject(); // only the x-side orientation is tabulated
            const long long p = rf.params[0], q = rf.params[1];
            const bool lo = d.contains((int)p, 0), hi = d.contains((int)p, f.m);
            if (lo && hi) return H0Descriptor::base_tensor(n * m, "D1");
            if (lo) return H0Descriptor::base_tensor(p * m, "D1");
            if (hi) return H0Descriptor::base_tensor(q * m, "D1");
            return H0Descriptor::base_only("D1");
        }
        case TableKey::osp_even:
        case TableKey::osp_oo:
            if (base.factor == 1)
                return d.contains(2, 0) ? H0Descriptor::base_tensor(2 * m, "D1")
                                        : H0Descriptor::base_only("D1");
            if (f.fam == Family::B) return H0Descriptor::base_only("D1"); // odd SO dimension
            return d.contains(0, f.m) ? H0Descriptor::base_tensor(n * m, "D1")
                                      : H0Descriptor::base_only("D1");
        case TableKey::osp_star:
            if (base.factor == 1)
                return d.contains(f.n, 0) ? H0Descriptor::base_tensor(n * m, "D1")
                                          : H0Descriptor::base_only("D1");
            return d.contains(0, f.m) ? H0Descriptor::base_tensor(n * m, "D1")
                                      : H0Descriptor::base_only("D1");
        default: reject();
    }
    return H0Descriptor::constants();
}

} // namespace superflag
