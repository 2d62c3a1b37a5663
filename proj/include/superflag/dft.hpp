#pragma once

#include "parabolic.hpp"
#include "realform.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace superflag {

struct PositiveSystem {
    FamilyDescriptor fam;
    std::vector<Root> sigma_plus; // sorted
    Weight rho0, rho1, rho;       // rho = rho0 - rho1
};

// full flag refining every parabolic whose Levi is purely even; its xi puts
// the whole x-block above the y-block
inline FlagType distinguished_borel(const FamilyDescriptor& f) {
    FlagType d;
    switch (f.fam) {
        case Family::A:
            for (int i = 1; i <= f.n; ++i) d.steps.push_back({i, 0});
            for (int b = 1; b < f.m; ++b) d.steps.push_back({f.n, b});
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 1; i <= f.xr(); ++i) d.steps.push_back({i, 0});
            for (int b = 1; b <= f.m; ++b) d.steps.push_back({f.xr(), b});
            break;
        case Family::Q:
            for (int i = 1; i < f.n; ++i) d.steps.push_back({i, i});
            break;
        case Family::P: throw std::logic_error("no distinguished Borel flag for P");
    }
    return d;
}

inline PositiveSystem rho(const FamilyDescriptor& f, const FlagType& borel,
                          FlagConvention conv = {}) {
    const auto xi = xi_from_flag(f, borel, conv);
    const auto sigma = build_roots(f);
    PositiveSystem ps;
    ps.fam = f;
    Weight e0 = Weight::zero(xi.levels.x.size(), xi.levels.y.size());
    Weight e1 = e0;
    for (const auto& r : sigma) {
        const Rat v = eval(r.w, xi.levels);
        if (v == 0)
            throw std::invalid_argument(f.name() + " [" + flag_str(borel) +
                                        "]: not a regular refinement, " + root_str(r) +
                                        " vanishes on xi");
        if (v > 0) {
            ps.sigma_plus.push_back(r);
            if (r.parity != Parity::odd) e0 = e0 + r.w;
            if (r.parity != Parity::even) e1 = e1 + r.w;
        }
    }
    ps.rho0 = Rat(1, 2) * e0;
    ps.rho1 = Rat(1, 2) * e1;
    ps.rho = ps.rho0 - ps.rho1;
    return ps;
}

inline PositiveSystem distinguished_positive_system(const FamilyDescriptor& f) {
    return rho(f, distinguished_borel(f));
}

enum class TypicalityVariant { paper_anisotropic, standard_isotropic };

// the paper tests anisotropic odd roots without a rho-shift; the standard
// notion tests isotropic ones against lambda + rho. Both are exposed.
inline bool is_typical(const FamilyDescriptor& f, const Weight& lambda, TypicalityVariant v,
                       const PositiveSystem& ps) {
    for (const auto& r : build_roots(f)) {
        if (r.parity == Parity::even) continue;
        const bool aniso = inner(r.w, r.w) != 0;
        if (v == TypicalityVariant::paper_anisotropic) {
            if (aniso && inner(lambda, r.w) == 0) return false;
        } else {
            if (!aniso && inner(lambda + ps.rho, r.w) == 0) return false;
        }
    }
    return true;
}

inline bool is_typical(const FamilyDescriptor& f, const Weight& lambda, TypicalityVariant v) {
    return is_typical(f, lambda, v, distinguished_positive_system(f));
}

namespace detail {

inline std::vector<Root> even_part(const std::vector<Root>& roots) {
    std::vector<Root> ev;
    for (const auto& r : roots)
        if (r.parity != Parity::odd) ev.push_back(r);
    return ev;
}

inline std::vector<Root> simple_roots(const std::vector<Root>& positives) {
    std::vector<Root> simple;
    for (const auto& a : positives) {
        bool decomposable = false;
        for (const auto& b : positives) {
            if (decomposable) break;
            for (const auto& c : positives)
                if (b.w + c.w == a.w) {
                    decomposable = true;
                    break;
                }
        }
        if (!decomposable) simple.push_back(a);
    }
    return simple;
}

// coroot pairing 2<v,a>/<a,a>; the y-block sign of the form cancels
inline Rat pair_cov(const Weight& v, const Weight& a) {
    return 2 * inner(v, a) / inner(a, a);
}

inline Weight reflect(const Weight& v, const Weight& a) { return v - pair_cov(v, a) * a; }

// -1 on a wall, otherwise an index identifying the sign chamber
inline std::optional<std::vector<int>> chamber(const Weight& mu,
                                               const std::vector<Root>& simples) {
    std::vector<int> signs;
    for (const auto& a : simples) {
        const Rat p = inner(mu, a.w);
        if (p == 0) return std::nullopt;
        signs.push_back(p > 0 ? 1 : -1);
    }
    return signs;
}

inline std::set<Weight> subset_sums(const std::vector<Root>& roots, std::size_t n,
                                    std::size_t m) {
    std::set<Weight> sums{Weight::zero(n, m)};
    for (const auto& r : roots) {
        std::set<Weight> next = sums;
        for (const auto& s : sums) next.insert(s + r.w);
        sums = std::move(next);
    }
    return sums;
}

inline bool one_chamber(const std::set<Weight>& ws, const std::vector<Root>& simples) {
    std::optional<std::vector<int>> ref;
    for (const auto& w : ws) {
        auto c = chamber(w, simples);
        if (!c) return false;
        if (!ref) ref = c;
        else if (*ref != *c) return false;
    }
    return true;
}

} // namespace detail

struct GenericityReport {
    bool gamma_plus = false;
    bool gamma_tilde = false;
    bool generic = false;
};

inline GenericityReport genericity(const FamilyDescriptor& f, const Weight& lambda,
                                   const PositiveSystem& ps) {
    const auto sigma = build_roots(f);
    std::vector<Root> odd_pos, odd_all;
    for (const auto& r : ps.sigma_plus)
        if (r.parity != Parity::even) odd_pos.push_back(r);
    for (const auto& r : sigma)
        if (r.parity != Parity::even) odd_all.push_back(r);
    const auto simples = detail::simple_roots(detail::even_part(ps.sigma_plus));
    const std::size_t nx = lambda.x.size(), ny = lambda.y.size();

    auto shift_down = [&](const Weight& base, const std::set<Weight>& gamma) {
        std::set<Weight> out;
        for (const auto& g : gamma) out.insert(base - g);
        return out;
    };
    const auto gamma_plus_sums = detail::subset_sums(odd_pos, nx, ny);
    const auto gamma_tilde_sums = detail::subset_sums(odd_all, nx, ny);

    GenericityReport rep;
    rep.gamma_plus = detail::one_chamber(shift_down(lambda, gamma_plus_sums), simples);
    rep.gamma_tilde = detail::one_chamber(shift_down(lambda, gamma_tilde_sums), simples);
    rep.generic = true;
    for (const auto& g : gamma_plus_sums)
        if (!detail::one_chamber(shift_down(lambda - g, gamma_tilde_sums), simples)) {
            rep.generic = false;
            break;
        }
    return rep;
}

// all multiset sums of at most s negated relative roots -(Phi_p \ Phi_j);
// even roots enter at most once, odd ones without bound (the relative odd
// differentials commute, so they generate a symmetric algebra)
inline std::set<Weight> relative_weights(const PhiSets& phi_p, const std::vector<Root>& phi_j,
                                         int s, int max_s = 6) {
    if (s < 0) throw std::invalid_argument("relative_weights: s must be nonnegative");
    std::vector<Root> rel;
    std::set_difference(phi_p.phi.begin(), phi_p.phi.end(), phi_j.begin(), phi_j.end(),
                        std::back_inserter(rel));
    if (s > max_s) {
        std::size_t evens = 0, odds = 0;
        for (const auto& r : rel) (r.parity == Parity::even ? evens : odds)++;
        double est = 1;
        for (int i = 0; i < s && i < (int)evens; ++i) est *= 2;
        for (std::size_t i = 0; i < odds; ++i) est *= s + 1;
        throw std::length_error("relative_weights: s=" + std::to_string(s) +
                                " exceeds the configured bound " + std::to_string(max_s) +
                                " (crude cardinality estimate " + std::to_string((long long)est) +
                                ")");
    }
    std::size_t nx = 0, ny = 0;
    if (!phi_p.phi.empty()) {
        nx = phi_p.phi.front().w.x.size();
        ny = phi_p.phi.front().w.y.size();
    } else if (!phi_j.empty()) {
        nx = phi_j.front().w.x.size();
        ny = phi_j.front().w.y.size();
    }
    std::set<Weight> out;
    auto rec = [&](auto&& self, std::size_t idx, int left, const Weight& acc) -> void {
        out.insert(acc);
        if (left == 0) return;
        for (std::size_t i = idx; i < rel.size(); ++i) {
            const int cap = rel[i].parity == Parity::even ? 1 : left;
            Weight cur = acc;
            for (int k = 1; k <= cap && k <= left; ++k) {
                cur = cur - rel[i].w;
                self(self, i + 1, left - k, cur);
            }
        }
    };
    rec(rec, 0, s, Weight::zero(nx, ny));
    return out;
}

enum class CycleParity { purely_even, type_I, type_II };

inline const char* cycle_parity_name(CycleParity p) {
    switch (p) {
        case CycleParity::purely_even: return "purely_even";
        case CycleParity::type_I: return "type_I";
        case CycleParity::type_II: return "type_II";
    }
    return "?";
}

// weight-level data of one catalogued cycle-space situation
struct DFTCase {
    FamilyDescriptor fam;
    RealFormDescriptor rf;
    FlagType delta;
    std::string label; // description of K
    CycleParity parity = CycleParity::purely_even;
    std::vector<Root> sigma_k;  // K-roots, sorted
    std::vector<Root> phi_j;    // cycle stabilizer roots, == sigma_k
    std::vector<Root> r_plus_k; // Phi^n(delta) intersected with sigma_k
    Weight rho_k;
    std::optional<Root> gamma_sigma; // type II only: the sp(2) root
    PhiSets phi;
    PositiveSystem ps; // distinguished positive system of g
};

namespace detail {

// factor labels: 0 = not assigned, otherwise a factor id; a root belongs to K
// when all its nonzero coordinates carry the same factor id
inline bool same_factor(const Root& r, const std::vector<int>& xf, const std::vector<int>& yf) {
    int seen = 0;
    for (std::size_t i = 0; i < r.w.x.size(); ++i)
        if (r.w.x[i] != 0) {
            if (xf[i] == 0 || (seen && xf[i] != seen)) return false;
            seen = xf[i];
        }
    for (std::size_t j = 0; j < r.w.y.size(); ++j)
        if (r.w.y[j] != 0) {
            if (yf[j] == 0 || (seen && yf[j] != seen)) return false;
            seen = yf[j];
        }
    return seen != 0;
}

inline Rat coord_sum(const Weight& w) {
    Rat s = 0;
    for (const auto& v : w.x) s += v;
    for (const auto& v : w.y) s += v;
    return s;
}

inline bool x_support_at(const Root& r, int i1) { return r.w.x[i1 - 1] != 0; }

// the short singletons +-x_i, +-y_j: one nonzero coordinate of size 1
inline bool short_singleton(const Root& r) {
    int nz = 0;
    Rat val = 0;
    for (const auto& v : r.w.x)
        if (v != 0) {
            ++nz;
            val = v;
        }
    for (const auto& v : r.w.y)
        if (v != 0) {
            ++nz;
            val = v;
        }
    return nz == 1 && (val == 1 || val == -1);
}

// factor id of a root already known to live in a single factor
inline int factor_of(const Root& r, const std::vector<int>& xf, const std::vector<int>& yf) {
    for (std::size_t i = 0; i < r.w.x.size(); ++i)
        if (r.w.x[i] != 0) return xf[i];
    for (std::size_t j = 0; j < r.w.y.size(); ++j)
        if (r.w.y[j] != 0) return yf[j];
    return 0;
}

} // namespace detail

inline DFTCase make_dft_case(const FamilyDescriptor& f, const std::string& rf_key,
                             const FlagType& delta) {
    auto reject = [&](const std::string& why) {
        throw std::invalid_argument("no catalogued cycle-space case for " + f.name() + " / " +
                                    rf_key + ": " + why);
    };
    if (f.fam == Family::P) reject("P(n) is not basic classical; no theta is catalogued");
    DFTCase c;
    c.fam = f;
    c.rf = find_real_form(f, rf_key);
    c.delta = delta;
    c.phi = phi_sets(f, c.rf.conv, delta);
    c.ps = distinguished_positive_system(f);
    const auto sigma = build_roots(f);
    const int n = f.xr(), m = f.yr();
    const auto& pr = c.rf.params;
    auto keep = [&](auto&& pred, CycleParity parity, std::string label) {
        for (const auto& r : sigma)
            if (pred(r)) c.sigma_k.push_back(r);
        c.parity = parity;
        c.label = std::move(label);
    };
    auto purely_even_all = [&](std::string label) {
        keep([](const Root& r) { return r.parity != Parity::odd; }, CycleParity::purely_even,
             std::move(label));
    };

    switch (f.fam) {
        case Family::A: {
            if (c.rf.table == TableKey::su) {
                const int p = pr[0], q = pr[1], r_ = pr[2], s_ = pr[3];
                if ((q == 0 && s_ == 0) || (p == 0 && r_ == 0)) {
                    purely_even_all("K = G_0 (compact form)");
                    break;
                }
                if (!(delta.contains(p, r_) || delta.contains(p, s_) || delta.contains(q, r_) ||
                      delta.contains(q, s_)))
                    reject("the K-stabilizer has atypical Levi part for this delta");
                std::vector<int> xf(f.n), yf(f.m);
                for (int i = 0; i < f.n; ++i) xf[i] = i < p ? 1 : 2;
                for (int j = 0; j < f.m; ++j) yf[j] = j < r_ ? 1 : 2;
                keep([&](const Root& r) { return detail::same_factor(r, xf, yf); },
                     CycleParity::type_I,
                     "K = S(GL(" + std::to_string(p) + "|" + std::to_string(r_) + ") x GL(" +
                         std::to_string(q) + "|" + std::to_string(s_) + "))");
                break;
            }
            if (c.rf.key == "even_sl_RH" && f.m == 2) {
                keep(
                    [&](const Root& r) {
                        if (r.parity != Parity::even) return true;
                        for (int i = 0; i < f.n; ++i)
                            if (r.w.x[i] != 0)
                                for (int j = i + 1; j < f.n; ++j)
                                    if (r.w.x[j] != 0 && i + j + 2 == f.n + 1) return false;
                        return true;
                    },
                    CycleParity::type_I, "K = Osp(" + std::to_string(f.n) + "|2)");
                break;
            }
            if (c.rf.key == "even_sl_RH" && f.n == 2) {
                keep(
                    [&](const Root& r) {
                        if (r.parity != Parity::even) return true;
                        for (int a = 0; a < f.m; ++a)
                            if (r.w.y[a] != 0)
                                for (int b = a + 1; b < f.m; ++b)
                                    if (r.w.y[b] != 0 && a + b + 2 == f.m + 1) return false;
                        return true;
                    },
                    CycleParity::type_I, "K = Osp(2|" + std::to_string(f.m) + ")");
                break;
            }
            if (c.rf.key == "uspi") {
                keep(
                    [&](const Root& r) {
                        if (r.parity == Parity::even) return true;
                        for (int i = 0; i < f.n; ++i)
                            if (r.w.x[i] != 0) return r.w.y[i] == 0;
                        return true;
                    },
                    CycleParity::type_I, "K = PSQ(" + std::to_string(f.n) + ")");
                break;
            }
            if (c.rf.key == "sl_R" || c.rf.key == "sl_H") {
                keep(
                    [&](const Root& r) {
                        if (r.parity != Parity::even) return false;
                        for (int i = 0; i < f.n; ++i)
                            if (r.w.x[i] != 0)
                                for (int j = i + 1; j < f.n; ++j)
                                    if (r.w.x[j] != 0 && i + j + 2 == f.n + 1) return false;
                        for (int a = 0; a < f.m; ++a)
                            if (r.w.y[a] != 0)
                                for (int b = a + 1; b < f.m; ++b)
                                    if (r.w.y[b] != 0 && a + b + 2 == f.m + 1) return false;
                        return true;
                    },
                    CycleParity::purely_even,
                    c.rf.key == "sl_R" ? "K_0 = SO(n,C) x SO(m,C)" : "K_0 = Sp(n,C) x Sp(m,C)");
                break;
            }
            reject("no Cartan isomorphism and no commuting involution");
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            if (c.rf.key == "even_sostar_sp") {
                keep([&](const Root& r) { return detail::coord_sum(r.w) == 0; },
                     CycleParity::type_I,
                     "K = GL(" + std::to_string(n) + "|" + std::to_string(m) + ")");
                break;
            }
            if (c.rf.kind == RealFormKind::even_real &&
                (c.rf.table == TableKey::osp_even || c.rf.table == TableKey::osp_oo)) {
                const int a = pr[0], b = pr[1], r_ = pr[2], s_ = pr[3];
                if (std::min(a, b) == 0 && r_ == 0) {
                    purely_even_all("K = G_0 (compact form)");
                    break;
                }
                if (std::min(a, b) == 0 && r_ == 1) {
                    // SO(p) x Sp(2,2s): K = Osp(p|2) x Sp(2s,C); the second
                    // factor is purely even, so its short singletons +-y_j are
                    // not K-roots
                    const int p = std::max(a, b);
                    std::vector<int> xf(n, 1), yf(m, 2);
                    yf[0] = 1;
                    keep([&](const Root& r) {
                             return detail::same_factor(r, xf, yf) &&
                                    !(detail::short_singleton(r) &&
                                      detail::factor_of(r, xf, yf) == 2);
                         },
                         p % 2 == 1 ? CycleParity::type_II : CycleParity::type_I,
                         "K = Osp(" + std::to_string(p) + "|2) x Sp(" + std::to_string(2 * s_) +
                             ",C)");
                    if (p % 2 == 1) {
                        Weight g = Weight::zero(n, m);
                        g.y[0] = 2;
                        c.gamma_sigma = Root{g, Parity::even};
                    }
                    break;
                }
                const bool has2 = a == 2 || b == 2;
                const int p = a == 2 ? b : a;
                if (has2 && p >= 1 && r_ == 1) {
                    // SO(p,2) x Sp(2,2s): K = Osp(p|2) x Osp(2|2s); the second
                    // factor has no short roots (so(2) is a torus and its odd
                    // module C^2 (x) C^{2s} has no zero weight)
                    std::vector<int> xf(n, 1), yf(m, 2);
                    xf[n - 1] = 2;
                    yf[0] = 1;
                    keep([&](const Root& r) {
                             return detail::same_factor(r, xf, yf) &&
                                    !(detail::short_singleton(r) &&
                                      detail::factor_of(r, xf, yf) == 2);
                         },
                         p % 2 == 1 ? CycleParity::type_II : CycleParity::type_I,
                         "K = Osp(" + std::to_string(p) + "|2) x Osp(2|" +
                             std::to_string(2 * s_) + ")");
                    if (p % 2 == 1) {
                        Weight g = Weight::zero(n, m);
                        g.y[0] = 2;
                        c.gamma_sigma = Root{g, Parity::even};
                    }
                    break;
                }
                if (has2 && p >= 1 && r_ == 0) {
                    // SO(p,2) x Sp(2m): K = Osp(p|2m) x SO(2,C)
                    keep([&](const Root& r) { return !detail::x_support_at(r, n); },
                         p % 2 == 1 && m == 1 ? CycleParity::type_II : CycleParity::type_I,
                         "K = Osp(" + std::to_string(p) + "|" + std::to_string(2 * m) +
                             ") x SO(2,C)");
                    if (p % 2 == 1 && m == 1) {
                        Weight g = Weight::zero(n, m);
                        g.y[0] = 2;
                        c.gamma_sigma = Root{g, Parity::even};
                    }
                    break;
                }
                reject("this even real form is outside the catalogued SO(p,2)/SO(p) shapes");
            }
            if (c.rf.kind == RealFormKind::real) {
                // Cartan isomorphism: K_0 is the complexified maximal compact
                std::vector<int> xf(n, 0), yf(m, 0);
                std::vector<Root> extra;
                if (c.rf.table == TableKey::osp_star) {
                    const int r_ = pr[0];
                    for (int j = 0; j < m; ++j) yf[j] = j < r_ ? 1 : 2;
                    keep(
                        [&](const Root& r) {
                            if (r.parity != Parity::even) return false;
                            bool xs = false, ys = false;
                            for (const auto& v : r.w.x) xs |= v != 0;
                            for (const auto& v : r.w.y) ys |= v != 0;
                            if (xs && !ys) return detail::coord_sum(r.w) == 0; // U(n) side
                            if (ys && !xs) return detail::same_factor(r, xf, yf);
                            return false;
                        },
                        CycleParity::purely_even, "K_0 = GL(n,C) x Sp(2r,C) x Sp(2s,C)");
                    break;
                }
                const int p = pr[0], q = pr[1];
                const bool odd_odd = p % 2 == 1 && q % 2 == 1;
                const int k1 = odd_odd ? (p - 1) / 2 : p / 2;
                const int nb = odd_odd ? n - 1 : n; // paired x-range
                auto x_block = [&](int i0) { return i0 < k1 ? 1 : 2; };
                const int odd_block = p % 2 == 1 ? 1 : (q % 2 == 1 ? 2 : 0);
                keep(
                    [&](const Root& r) {
                        if (r.parity != Parity::even) return false;
                        std::vector<int> xs;
                        bool ys = false;
                        for (int i = 0; i < n; ++i)
                            if (r.w.x[i] != 0) xs.push_back(i);
                        for (const auto& v : r.w.y) ys |= v != 0;
                        if (!xs.empty() && ys) return false;
                        if (ys) return detail::coord_sum(r.w) == 0; // GL(m) from U(m)
                        if (odd_odd) {
                            // restricted +-x_i roots are represented through x_n
                            if (xs.size() == 2 && xs[1] == n - 1) return xs[0] < nb;
                            return xs.size() == 2 && xs[1] < nb &&
                                   x_block(xs[0]) == x_block(xs[1]);
                        }
                        if (xs.size() == 1) return x_block(xs[0]) == odd_block;
                        return xs.size() == 2 && x_block(xs[0]) == x_block(xs[1]);
                    },
                    CycleParity::purely_even, "K_0 = SO(p,C) x SO(q,C) x GL(m,C)");
                break;
            }
            reject("this even real form is outside the catalogued shapes");
            break;
        }
        case Family::Q: {
            if (c.rf.table == TableKey::q_unitary) {
                const int p = pr[0];
                std::vector<int> xf(f.n), yf;
                for (int i = 0; i < f.n; ++i) xf[i] = i < p ? 1 : 2;
                keep([&](const Root& r) { return detail::same_factor(r, xf, yf); },
                     CycleParity::type_I,
                     "K = PS(Q(" + std::to_string(p) + ") x Q(" + std::to_string(f.n - p) +
                         "))");
                break;
            }
            reject("psq_R and psq_H admit neither a Cartan isomorphism nor a compatible theta");
            break;
        }
        case Family::P: break; // rejected above
    }

    std::sort(c.sigma_k.begin(), c.sigma_k.end());
    c.phi_j = c.sigma_k;
    std::set_intersection(c.phi.phi_n.begin(), c.phi.phi_n.end(), c.sigma_k.begin(),
                          c.sigma_k.end(), std::back_inserter(c.r_plus_k));
    Weight e0 = Weight::zero(c.ps.rho.x.size(), c.ps.rho.y.size());
    Weight e1 = e0;
    for (const auto& r : c.sigma_k) {
        if (!std::binary_search(c.ps.sigma_plus.begin(), c.ps.sigma_plus.end(), r)) continue;
        if (r.parity != Parity::odd) e0 = e0 + r.w;
        if (r.parity != Parity::even) e1 = e1 + r.w;
    }
    c.rho_k = Rat(1, 2) * (e0 - e1);
    return c;
}

namespace detail {

// typicality against the anisotropic odd roots of K itself
inline bool typical_for_k(const DFTCase& c, const Weight& lambda) {
    for (const auto& r : c.sigma_k)
        if (r.parity != Parity::even && inner(r.w, r.w) != 0 && inner(lambda, r.w) == 0)
            return false;
    return true;
}

} // namespace detail

// sufficient negativity: <lambda + beta + rho_k, gamma> < 0 over the relative
// weight set; type II adds the typical-or-nonnegative clause against gamma_sigma
inline bool dft_injectivity_sufficient(const DFTCase& c, const Weight& lambda, int s,
                                       int max_s = 6) {
    const auto M = relative_weights(c.phi, c.phi_j, s, max_s);
    for (const auto& beta : M) {
        const Weight v = lambda + beta + c.rho_k;
        for (const auto& g : c.r_plus_k)
            if (!(inner(v, g.w) < 0)) return false;
        if (c.parity == CycleParity::type_II) {
            if (!detail::typical_for_k(c, lambda + beta) && inner(v, c.gamma_sigma->w) < 0)
                return false;
        }
    }
    return true;
}

struct DotConjugate {
    bool singular = false;
    long long w_length = 0;
    Weight Lambda;
};

// unique dot-conjugate of lambda landing strictly dominant, via simple-root
// ascent on lambda + rho; length is the number of ascent steps
inline DotConjugate dominant_dot_conjugate(const FamilyDescriptor& f, const Weight& lambda,
                                           const PositiveSystem& ps) {
    if (f.fam == Family::P || f.fam == Family::Q)
        throw std::invalid_argument("dominant_dot_conjugate: even Weyl data not catalogued for " +
                                    f.name());
    const auto evens = detail::even_part(ps.sigma_plus);
    Weight v = lambda + ps.rho;
    for (const auto& a : evens)
        if (inner(v, a.w) == 0) return {true, 0, Weight::zero(v.x.size(), v.y.size())};
    const auto simples = detail::simple_roots(evens);
    long long len = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : simples)
            if (detail::pair_cov(v, a.w) < 0) {
                v = detail::reflect(v, a.w);
                ++len;
                moved = true;
                break;
            }
    }
    return {false, len, v - ps.rho};
}

struct TypeIIResult {
    bool double_transform = false; // true: K_Lambda and its twisted dual both occur
    Weight Lambda;
};

// detector for the osp(p|2)-cycle regime: two transforms exactly when lambda
// is atypical for K and w_0 . lambda is integral dominant
inline TypeIIResult type_II_double_transform(const DFTCase& c, const Weight& lambda) {
    if (c.parity != CycleParity::type_II)
        throw std::invalid_argument("type_II_double_transform: " + c.label +
                                    " is not a type II cycle case");
    const Root gs = *c.gamma_sigma;
    std::vector<Root> wprime; // positive even K-roots without gamma_sigma
    for (const auto& r : c.sigma_k)
        if (r.parity != Parity::odd && !(r.w == gs.w) &&
            std::binary_search(c.ps.sigma_plus.begin(), c.ps.sigma_plus.end(), r))
            wprime.push_back(r);

    bool integral = true;
    for (const auto& v : lambda.x) integral &= denominator(v) == 1;
    for (const auto& v : lambda.y) integral &= denominator(v) == 1;

    const bool atypical = !detail::typical_for_k(c, lambda);
    Weight v = lambda + c.rho_k;
    // w_0 . lambda is dominant exactly when lambda + rho_k is antidominant
    // regular for the rest of the K-Weyl group
    bool antidom = true;
    for (const auto& a : wprime) antidom &= detail::pair_cov(v, a.w) < 0;

    const auto simples = detail::simple_roots(wprime);
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : simples)
            if (detail::pair_cov(v, a.w) < 0) {
                v = detail::reflect(v, a.w);
                moved = true;
                break;
            }
    }
    v = detail::reflect(v, gs.w); // sigma acts unconditionally
    return {atypical && integral && antidom, v - c.rho_k};
}

} // namespace superflag
