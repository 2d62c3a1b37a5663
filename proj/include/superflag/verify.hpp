#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "classify.hpp"
#include "dft.hpp"
#include "json_io.hpp"
#include "matrixmodel.hpp"
#include "superfun.hpp"

namespace superflag {

struct VerifyBounds {
    int a_rank = 6;   // A(n|m): n + m <= a_rank
    int bcd_rank = 4; // B(n,m), C(m), D(n,m): n + m <= bcd_rank
    int pq_rank = 4;  // P(n), Q(n): n <= pq_rank
    friend bool operator==(const VerifyBounds&, const VerifyBounds&) = default;
};

struct VerifyConfig {
    VerifyBounds bounds;        // enumeration bounds
    VerifyBounds oracle_bounds; // matrix-model sweeps stop above these
    bool with_oracle = true;
    int jobs = 1;
};

struct VerifyRow {
    std::string family;
    std::string real_form; // "-" for family-level checks
    std::string check;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> offenders; // first few failures, in replayable form
    double seconds = 0; // informational; never serialized, so reports stay byte-stable
};

struct VerifyReport {
    VerifyBounds bounds;
    VerifyBounds oracle_bounds;
    bool with_oracle = true;
    std::vector<VerifyRow> rows;

    std::uint64_t total_checked() const {
        std::uint64_t s = 0;
        for (const auto& r : rows) s += r.checked;
        return s;
    }
    std::uint64_t total_failed() const {
        std::uint64_t s = 0;
        for (const auto& r : rows) s += r.failed;
        return s;
    }
    bool ok() const { return total_failed() == 0; }
};

namespace vdetail {

inline int rank_of(const FamilyDescriptor& f) {
    switch (f.fam) {
        case Family::A:
        case Family::B:
        case Family::D: return f.n + f.m;
        case Family::C: return 1 + f.m;
        case Family::P:
        case Family::Q: return f.n;
    }
    return 0;
}

inline int bound_for(const FamilyDescriptor& f, const VerifyBounds& b) {
    switch (f.fam) {
        case Family::A: return b.a_rank;
        case Family::B:
        case Family::C:
        case Family::D: return b.bcd_rank;
        case Family::P:
        case Family::Q: return b.pq_rank;
    }
    return 0;
}

inline std::string params_str(const FamilyDescriptor& f) {
    switch (f.fam) {
        case Family::A:
        case Family::B:
        case Family::D: return std::to_string(f.n) + "," + std::to_string(f.m);
        case Family::C: return std::to_string(f.m);
        case Family::P:
        case Family::Q: return std::to_string(f.n);
    }
    return "";
}

inline std::string replay(const char* sub, const FamilyDescriptor& f, const std::string& rf_key,
                          const FlagType& d, const std::string& extra = "") {
    std::string s = std::string("superflag ") + sub + " --family " + family_name(f.fam) +
                    " --params " + params_str(f);
    if (f.psl) s += " --variant psl";
    if (!rf_key.empty() && rf_key != "-") s += " --real-form '" + rf_key + "'";
    s += " --delta \"" + flag_str(d) + "\"";
    if (!extra.empty()) s += " " + extra;
    return s;
}

// the default sweep: every catalogued family instance inside the rank bounds
inline std::vector<FamilyDescriptor> instances(const VerifyBounds& b) {
    std::vector<FamilyDescriptor> out;
    for (int n = 1; n < b.a_rank; ++n)
        for (int m = 1; n + m <= b.a_rank; ++m) {
            out.push_back({Family::A, n, m});
            if (n == m && n >= 2) out.push_back({Family::A, n, m, true});
        }
    for (int n = 1; n < b.bcd_rank; ++n)
        for (int m = 1; n + m <= b.bcd_rank; ++m) out.push_back({Family::B, n, m});
    for (int m = 1; 1 + m <= b.bcd_rank; ++m) out.push_back({Family::C, 1, m});
    for (int n = 2; n < b.bcd_rank; ++n)
        for (int m = 1; n + m <= b.bcd_rank; ++m) out.push_back({Family::D, n, m});
    for (int n = 3; n <= b.pq_rank; ++n) out.push_back({Family::P, n, 0});
    for (int n = 2; n <= b.pq_rank; ++n) out.push_back({Family::Q, n, 0});
    return out;
}

// splitmix64: portable deterministic stream, independent of libstdc++ internals
inline std::uint64_t rnd_next(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline long long rnd_int(std::uint64_t& s, long long lo, long long hi) {
    return lo + static_cast<long long>(rnd_next(s) %
                                       static_cast<std::uint64_t>(hi - lo + 1));
}

inline Weight rnd_weight(std::uint64_t& s, std::size_t nx, std::size_t ny, long long lo,
                         long long hi) {
    Weight w = Weight::zero(nx, ny);
    for (auto& v : w.x) v = rnd_int(s, lo, hi);
    for (auto& v : w.y) v = rnd_int(s, lo, hi);
    return w;
}

inline std::uint64_t seed_of(const FamilyDescriptor& f, std::uint64_t salt) {
    return 0x53554652464c4147ull ^ (static_cast<std::uint64_t>(f.fam) << 40) ^
           (static_cast<std::uint64_t>(f.n) << 24) ^ (static_cast<std::uint64_t>(f.m) << 8) ^
           (f.psl ? 2 : 0) ^ (salt << 48);
}

inline std::vector<Root> sorted(std::vector<Root> v) {
    std::sort(v.begin(), v.end(), [](const Root& a, const Root& b) { return cmp(a, b) < 0; });
    return v;
}

inline bool same_sets(const PhiSets& a, const PhiSets& b) {
    return sorted(a.phi) == sorted(b.phi) && sorted(a.phi_r) == sorted(b.phi_r) &&
           sorted(a.phi_n) == sorted(b.phi_n) && sorted(a.phi_c) == sorted(b.phi_c);
}

inline void offend(VerifyRow& r, std::string s) {
    if (r.offenders.size() < 3) r.offenders.push_back(std::move(s));
}

// ---- independent restatements used by the sweeps ---------------------------

// the four-case table of global functions on Z(delta)
inline H0Descriptor h0_expected(const FamilyDescriptor& f, const FlagType& d) {
    const int n = f.n, m = f.m;
    switch (f.fam) {
        case Family::A:
            if (d.contains(n, 0) || d.contains(0, m))
                return H0Descriptor::exterior(static_cast<long long>(n) * m);
            return H0Descriptor::constants();
        case Family::B:
        case Family::D: return H0Descriptor::constants();
        case Family::C:
            if (d.contains(1, 0)) return H0Descriptor::exterior(2LL * m);
            return H0Descriptor::constants();
        case Family::P:
            if (d.contains(n, 0)) return H0Descriptor::exterior(static_cast<long long>(n) * (n + 1) / 2);
            if (d.contains(0, n) || d.contains(0, n - 1))
                return H0Descriptor::exterior(static_cast<long long>(n) * (n - 1) / 2);
            return H0Descriptor::constants();
        case Family::Q: return H0Descriptor::constants();
    }
    return H0Descriptor::constants();
}

// +1 on one x coordinate, -1 on one y coordinate, nothing else
inline bool x_minus_y_shape(const Root& r) {
    int px = 0, ny = 0, other = 0;
    for (const auto& v : r.w.x) {
        if (v == 1) ++px;
        else if (v != 0) ++other;
    }
    for (const auto& v : r.w.y) {
        if (v == -1) ++ny;
        else if (v != 0) ++other;
    }
    return px == 1 && ny == 1 && other == 0;
}

// flat odometer enumeration of multiset sums, independent of the library's DFS
inline std::set<Weight> odometer(const std::vector<Root>& rel, int s, std::size_t nx,
                                 std::size_t ny) {
    std::vector<int> caps;
    for (const auto& r : rel) caps.push_back(r.parity == Parity::even ? 1 : s);
    std::vector<int> mult(rel.size(), 0);
    std::set<Weight> out;
    while (true) {
        int total = 0;
        for (int k : mult) total += k;
        if (total <= s) {
            Weight w = Weight::zero(nx, ny);
            for (std::size_t i = 0; i < rel.size(); ++i)
                for (int k = 0; k < mult[i]; ++k) w = w - rel[i].w;
            out.insert(w);
        }
        std::size_t i = 0;
        while (i < mult.size() && mult[i] == caps[i]) mult[i++] = 0;
        if (i == mult.size()) break;
        ++mult[i];
    }
    return out;
}

// brute-force dominant dot conjugate over the whole even Weyl group
struct WeylOracleResult {
    bool singular = false;
    long long length = 0;
    Weight Lambda;
    int dominant_count = 0;
};

inline void block_elements(int size, bool perms, int signs, // 0 none, 1 all, 2 even
                           std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    std::vector<int> p(size);
    for (int i = 0; i < size; ++i) p[i] = i;
    do {
        const int top = signs == 0 ? 1 : 1 << size;
        for (int mask = 0; mask < top; ++mask) {
            int flips = 0;
            std::vector<int> sg(size, 1);
            for (int i = 0; i < size; ++i)
                if (mask & (1 << i)) {
                    sg[i] = -1;
                    ++flips;
                }
            if (signs == 2 && flips % 2 == 1) continue;
            out.push_back({p, sg});
        }
        if (!perms) break;
    } while (std::next_permutation(p.begin(), p.end()));
}

inline Weight weyl_act(const std::pair<std::vector<int>, std::vector<int>>& wx,
                       const std::pair<std::vector<int>, std::vector<int>>& wy, const Weight& v) {
    Weight out = v;
    for (std::size_t i = 0; i < v.x.size(); ++i) out.x[i] = wx.second[i] * v.x[wx.first[i]];
    for (std::size_t j = 0; j < v.y.size(); ++j) out.y[j] = wy.second[j] * v.y[wy.first[j]];
    return out;
}

inline WeylOracleResult weyl_oracle(const FamilyDescriptor& f, const Weight& lambda,
                                    const PositiveSystem& ps) {
    std::vector<Root> evens;
    for (const auto& r : ps.sigma_plus)
        if (r.parity != Parity::odd) evens.push_back(r);
    const std::vector<Root> evs = sorted(evens);
    const Weight nu = lambda + ps.rho;
    WeylOracleResult res;
    for (const auto& a : evens)
        if (inner(nu, a.w) == 0) {
            res.singular = true;
            return res;
        }
    const int xsigns =
        f.fam == Family::A ? 0 : (f.fam == Family::B ? 1 : (f.fam == Family::C ? 0 : 2));
    const bool xperm = f.fam != Family::C;
    const int ysigns = f.fam == Family::A ? 0 : 1;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> xs, ys;
    block_elements(f.xr(), xperm, xsigns, xs);
    block_elements(f.yr(), true, ysigns, ys);
    for (const auto& wx : xs)
        for (const auto& wy : ys) {
            const Weight cand = weyl_act(wx, wy, nu);
            bool dom = true;
            for (const auto& a : evens)
                if (!(inner(cand, a.w) / inner(a.w, a.w) > 0)) {
                    dom = false;
                    break;
                }
            if (!dom) continue;
            ++res.dominant_count;
            long long len = 0;
            for (const auto& a : evens) {
                const Root neg{-weyl_act(wx, wy, a.w), a.parity};
                if (std::binary_search(evs.begin(), evs.end(), neg)) ++len;
            }
            res.length = len;
            res.Lambda = cand - ps.rho;
        }
    return res;
}

// direct evaluation of the type II criterion: integral, K-atypical, and
// antidominant regular for the K-Weyl group away from gamma_sigma
inline bool direct_type_II(const DFTCase& c, const Weight& lam) {
    bool integral = true;
    for (const auto& v : lam.x) integral &= denominator(v) == 1;
    for (const auto& v : lam.y) integral &= denominator(v) == 1;
    if (!integral) return false;

    bool atypical = false;
    for (const auto& r : c.sigma_k)
        if (r.parity != Parity::even && inner(r.w, r.w) != 0 && inner(lam, r.w) == 0)
            atypical = true;
    if (!atypical) return false;

    const Weight v = lam + c.rho_k;
    for (const auto& r : c.sigma_k) {
        if (r.parity == Parity::odd || r.w == c.gamma_sigma->w) continue;
        if (!std::binary_search(c.ps.sigma_plus.begin(), c.ps.sigma_plus.end(), r)) continue;
        if (!(2 * inner(v, r.w) / inner(r.w, r.w) < 0)) return false;
    }
    return true;
}

struct DFTRow {
    FamilyDescriptor f;
    std::string rf;
    std::string delta;
};

inline std::vector<DFTRow> dft_rows() {
    return {
        {{Family::A, 2, 1}, "su:1,1|1,0", "1|1"},
        {{Family::A, 2, 2}, "even_su:1,1|1,1", "1|1"},
        {{Family::A, 2, 2, true}, "even_su:0,2|0,2", "1|1"},
        {{Family::A, 3, 2}, "sl_R", "1|1"},
        {{Family::A, 3, 3, true}, "uspi", "1|1"},
        {{Family::A, 3, 2}, "even_sl_RH", "1|1"},
        {{Family::A, 2, 4}, "even_sl_RH", "1|2"},
        {{Family::B, 2, 1}, "osp:2,3", "2|0"},
        {{Family::B, 2, 1}, "even_so_sp:2,3,0,1", "1|0"},
        {{Family::B, 2, 2}, "even_so_sp:2,3,1,1", "1|1"},
        {{Family::B, 2, 2}, "even_so_sp:0,5,1,1", "1|0"},
        {{Family::C, 1, 2}, "osp11", "0|1"},
        {{Family::C, 1, 2}, "even_sostar_sp", "1|1"},
        {{Family::D, 2, 1}, "even_sostar_sp", "1|0"},
        {{Family::D, 2, 1}, "even_so_sp:2,2,0,1", "1|0"},
        {{Family::D, 2, 1}, "even_so_sp:0,4,0,1", "1|0"},
        {{Family::D, 2, 2}, "osp_star:1,1", "1|1"},
        {{Family::D, 2, 1}, "osp_oo:1,3", "1|0"},
        {{Family::Q, 3, 0}, "upq:1,2", "2|2"},
    };
}

inline std::vector<DFTRow> type_II_rows() {
    return {
        {{Family::B, 2, 1}, "even_so_sp:2,3,0,1", "1|0"},
        {{Family::B, 2, 2}, "even_so_sp:2,3,1,1", "1|1"},
        {{Family::B, 2, 2}, "even_so_sp:0,5,1,1", "1|0"},
    };
}

// ---- per-instance sweeps ----------------------------------------------------

inline std::vector<VerifyRow> check_instance(const FamilyDescriptor& f, const VerifyConfig& cfg) {
    std::vector<VerifyRow> rows;
    const std::string fam = f.name();
    const auto flags = enumerate_flag_types(f);
    const auto cat = catalog(f);
    const bool oracle_on = cfg.with_oracle && rank_of(f) <= bound_for(f, cfg.oracle_bounds);

    // 1. combinatorial stabilizer sets against the matrix model
    if (oracle_on) {
        VerifyRow r{fam, "-", "phi_oracle"};
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& d : flags) {
            ++r.checked;
            if (!same_sets(phi_sets(f, {}, d), stabilizer_phi(f, d))) {
                ++r.failed;
                offend(r, replay("classify", f, cat.empty() ? "" : cat.front().key, d,
                                 "--oracle"));
            }
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(std::move(r));
    }

    // 2. orbit codimension against the matrix model, all real forms
    if (oracle_on) {
        for (const auto& rf : cat) {
            VerifyRow r{fam, rf.key, "codim_oracle"};
            for (const auto& d : flags) {
                ++r.checked;
                if (odd_codimension(f, rf, d) != codim_oracle(f, rf.tau, d, rf.conv)) {
                    ++r.failed;
                    offend(r, replay("classify", f, rf.key, d, "--oracle"));
                }
            }
            rows.push_back(std::move(r));
        }
    }

    // 3. verdicts against the symmetry-condition table predictions
    for (const auto& rf : cat) {
        VerifyRow r{fam, rf.key, "ch3_table"};
        for (const auto& d : flags) {
            ++r.checked;
            if (!classify(f, rf, d).agreement) {
                ++r.failed;
                offend(r, replay("classify", f, rf.key, d));
            }
        }
        rows.push_back(std::move(r));
    }

    // 4. even real forms behave exactly like their associated real form
    for (const auto& rf : cat) {
        if (rf.kind != RealFormKind::even_real) continue;
        const auto partner = associated_real_form(f, rf);
        if (!partner) continue;
        VerifyRow r{fam, rf.key, "even_transfer"};
        const auto sigma = build_roots(f);
        ++r.checked;
        bool same_tau = rf.conv == partner->conv;
        for (const auto& root : sigma)
            if (!(rf.tau(root) == partner->tau(root))) same_tau = false;
        if (!same_tau) {
            ++r.failed;
            offend(r, "tau or convention of '" + rf.key + "' differs from '" + partner->key +
                          "' on " + fam);
        }
        for (const auto& d : flags) {
            ++r.checked;
            bool same = odd_codimension(f, rf, d) == odd_codimension(f, *partner, d) &&
                        is_base_measurable(f, rf, d) == is_base_measurable(f, *partner, d) &&
                        is_weakly_measurable(f, rf, d) == is_weakly_measurable(f, *partner, d) &&
                        is_strongly_measurable(f, rf, d) ==
                            is_strongly_measurable(f, *partner, d);
            const auto ra = classify(f, rf, d);
            const auto rb = classify(f, *partner, d);
            same &= ra.total_codim == rb.total_codim && ra.odd_codim == rb.odd_codim &&
                    ra.max_odd_dim == rb.max_odd_dim &&
                    ra.berezinian_invariant == rb.berezinian_invariant &&
                    ra.strongly_measurable == rb.strongly_measurable;
            if (!same) {
                ++r.failed;
                offend(r, replay("classify", f, rf.key, d));
            }
        }
        rows.push_back(std::move(r));
    }

    // 5a. global functions on the full flag supermanifold
    {
        VerifyRow r{fam, "-", "h0_table"};
        for (const auto& d : flags) {
            ++r.checked;
            if (!(h0_flag_supermanifold(f, d) == h0_expected(f, d))) {
                ++r.failed;
                offend(r, replay("h0", f, "", d));
            }
        }
        rows.push_back(std::move(r));
    }

    // 5b. conditions I/II match the root-level crossing criterion
    if (f.fam == Family::A) {
        const auto rf = find_real_form(f, "sl_R");
        VerifyRow r{fam, rf.key, "conditions_I_II"};
        const auto sigma = build_roots(f);
        for (const auto& d : flags) {
            const auto ps = phi_sets(f, rf.conv, d);
            auto in_phi = [&](const Root& root) {
                return std::binary_search(ps.phi.begin(), ps.phi.end(), root);
            };
            bool cross_x = false, cross_y = false;
            for (const auto& root : sigma) {
                if (root.parity != Parity::odd || !in_phi(root) || !in_phi(rf.tau(root)))
                    continue;
                if (x_minus_y_shape(root)) cross_x = true;
                if (x_minus_y_shape({-root.w, root.parity})) cross_y = true;
            }
            ++r.checked;
            if (condition_I(f, d) != !cross_x || condition_II(f, d) != !cross_y) {
                ++r.failed;
                offend(r, replay("h0", f, rf.key, d));
            }
        }
        rows.push_back(std::move(r));
    }

    // 5c. the three-way answer on osp(1,1|2m) flag domains
    if (f.fam == Family::C && f.m <= 3) {
        const auto rf = find_real_form(f, "osp11");
        VerifyRow r{fam, rf.key, "osp11_h0"};
        for (const auto& d : flags) {
            if (odd_codimension(f, rf, d).second != 0) continue;
            ++r.checked;
            const H0Descriptor expect = d.contains(0, f.m) ? H0Descriptor::exterior(2LL * f.m)
                                        : d.contains(1, f.m) ? H0Descriptor::exterior(f.m)
                                                             : H0Descriptor::constants();
            if (!(h0_flag_domain(f, rf, d, BaseKind::cycle()) == expect)) {
                ++r.failed;
                offend(r, replay("h0", f, rf.key, d, "--base cycle"));
            }
        }
        rows.push_back(std::move(r));
    }

    // 6a. dominant dot conjugates against the exhaustive even Weyl search
    if ((f.fam == Family::A || f.fam == Family::B || f.fam == Family::C ||
         f.fam == Family::D) &&
        !f.psl && rank_of(f) <= std::min(bound_for(f, cfg.bounds), 4)) {
        VerifyRow r{fam, "-", "dot_conjugate"};
        const auto ps = distinguished_positive_system(f);
        std::uint64_t seed = seed_of(f, 1);
        for (int t = 0; t < 80; ++t) {
            const Weight lam = rnd_weight(seed, f.xr(), f.yr(), -6, 6);
            const auto lib = dominant_dot_conjugate(f, lam, ps);
            const auto orc = weyl_oracle(f, lam, ps);
            ++r.checked;
            bool same = lib.singular == orc.singular;
            if (same && !lib.singular)
                same = orc.dominant_count == 1 && lib.w_length == orc.length &&
                       lib.Lambda == orc.Lambda;
            if (!same) {
                ++r.failed;
                offend(r, "dominant_dot_conjugate(" + fam + ", " + weight_str(lam) + ")");
            }
        }
        rows.push_back(std::move(r));
    }

    return rows;
}

// ---- cycle-space sweeps (fixed catalogue, run once) -------------------------

inline void check_dft(const VerifyConfig& cfg, std::vector<VerifyRow>& rows) {
    auto in_bounds = [&](const FamilyDescriptor& f) {
        return rank_of(f) <= bound_for(f, cfg.bounds);
    };

    // relative weight multisets against the flat odometer
    {
        const FamilyDescriptor f{Family::A, 2, 1};
        if (in_bounds(f)) {
            VerifyRow r{f.name(), "su:1,1|1,0", "relative_weights"};
            const auto c = make_dft_case(f, "su:1,1|1,0", parse_flag("1|1"));
            std::vector<Root> rel;
            std::set_difference(c.phi.phi.begin(), c.phi.phi.end(), c.phi_j.begin(),
                                c.phi_j.end(), std::back_inserter(rel),
                                [](const Root& a, const Root& b) { return cmp(a, b) < 0; });
            for (int s = 0; s <= 3; ++s) {
                ++r.checked;
                if (relative_weights(c.phi, c.phi_j, s) != odometer(rel, s, f.xr(), f.yr()))
                    ++r.failed;
            }
            // second route: empty stabilizer intersection, whole Phi contributes
            const auto ps = phi_sets(f, {}, parse_flag("1|1"));
            for (int s = 0; s <= 2; ++s) {
                ++r.checked;
                if (relative_weights(ps, {}, s) != odometer(sorted(ps.phi), s, f.xr(), f.yr()))
                    ++r.failed;
            }
            if (r.failed > 0) offend(r, "relative_weights vs odometer on A(2|1)");
            rows.push_back(std::move(r));
        }
    }

    // injectivity is antitone along admissible negative shifts
    for (const auto& row : dft_rows()) {
        if (!in_bounds(row.f)) continue;
        VerifyRow r{row.f.name(), row.rf, "dft_antitone"};
        const auto c = make_dft_case(row.f, row.rf, parse_flag(row.delta));
        std::vector<Root> aniso;
        for (const auto& g : c.sigma_k)
            if (g.parity != Parity::even && inner(g.w, g.w) != 0) aniso.push_back(g);
        std::uint64_t seed = seed_of(row.f, 2) ^ std::hash<std::string>{}(row.rf);
        for (int trial = 0; trial < 100; ++trial) {
            Weight lam;
            bool have = false;
            for (int k = 0; k < 20 && !have; ++k) {
                lam = rnd_weight(seed, c.ps.rho.x.size(), c.ps.rho.y.size(), -5, 2);
                have = dft_injectivity_sufficient(c, lam, 1);
            }
            if (!have) continue;
            for (int u = 0; u < 30; ++u) {
                const Weight mu = rnd_weight(seed, c.ps.rho.x.size(), c.ps.rho.y.size(), 0, 2);
                bool adm = true;
                for (const auto& g : c.r_plus_k) adm &= inner(mu, g.w) >= 0;
                if (c.parity == CycleParity::type_II) {
                    adm &= inner(mu, c.gamma_sigma->w) == 0;
                    for (const auto& g : aniso) adm &= inner(mu, g.w) == 0;
                }
                if (!adm) continue;
                ++r.checked;
                if (!dft_injectivity_sufficient(c, lam - mu, 1)) {
                    ++r.failed;
                    offend(r, "shift " + weight_str(lam) + " -> " + weight_str(lam - mu) +
                                  " on " + row.f.name() + " / " + row.rf);
                }
            }
        }
        if (r.checked == 0) {
            ++r.failed;
            offend(r, "no admissible shift sampled on " + row.f.name() + " / " + row.rf);
        }
        rows.push_back(std::move(r));
    }

    // the type II detector agrees with direct evaluation of its criterion
    for (const auto& row : type_II_rows()) {
        if (!in_bounds(row.f)) continue;
        VerifyRow r{row.f.name(), row.rf, "type_II_double"};
        const auto c = make_dft_case(row.f, row.rf, parse_flag(row.delta));
        const std::size_t dim = c.ps.rho.x.size() + c.ps.rho.y.size();
        std::vector<Weight> probes;
        std::vector<long long> coord(dim, -3);
        while (true) {
            Weight w = Weight::zero(c.ps.rho.x.size(), c.ps.rho.y.size());
            for (std::size_t i = 0; i < dim; ++i)
                (i < w.x.size() ? w.x[i] : w.y[i - w.x.size()]) = coord[i];
            probes.push_back(w);
            std::size_t i = 0;
            while (i < dim && coord[i] == 2) coord[i++] = -3;
            if (i == dim) break;
            ++coord[i];
        }
        std::uint64_t seed = seed_of(row.f, 3) ^ std::hash<std::string>{}(row.rf);
        for (int t = 0; t < 200; ++t) {
            Weight w = Weight::zero(c.ps.rho.x.size(), c.ps.rho.y.size());
            for (auto& v : w.x) v = Rat(rnd_int(seed, -6, 4)) / 2;
            for (auto& v : w.y) v = Rat(rnd_int(seed, -6, 4)) / 2;
            probes.push_back(w);
        }
        for (const auto& lam : probes) {
            ++r.checked;
            if (type_II_double_transform(c, lam).double_transform != direct_type_II(c, lam)) {
                ++r.failed;
                offend(r, "lambda " + weight_str(lam) + " on " + row.f.name() + " / " + row.rf);
            }
        }
        rows.push_back(std::move(r));
    }
}

} // namespace vdetail

inline VerifyReport run_verify(const VerifyConfig& cfg) {
    if (cfg.oracle_bounds.a_rank > cfg.bounds.a_rank ||
        cfg.oracle_bounds.bcd_rank > cfg.bounds.bcd_rank ||
        cfg.oracle_bounds.pq_rank > cfg.bounds.pq_rank)
        throw std::invalid_argument("oracle rank bounds must not exceed enumeration bounds");

    const auto insts = vdetail::instances(cfg.bounds);
    std::vector<std::vector<VerifyRow>> slots(insts.size());

    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < insts.size(); ++i)
            slots[i] = vdetail::check_instance(insts[i], cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mx;
        auto work = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= insts.size()) return;
                try {
                    slots[i] = vdetail::check_instance(insts[i], cfg);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mx);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(cfg.jobs, static_cast<int>(insts.size()));
        for (int i = 0; i < n; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }

    VerifyReport rep;
    rep.bounds = cfg.bounds;
    rep.oracle_bounds = cfg.oracle_bounds;
    rep.with_oracle = cfg.with_oracle;
    for (auto& s : slots)
        for (auto& r : s) rep.rows.push_back(std::move(r));
    vdetail::check_dft(cfg, rep.rows);
    return rep;
}

inline Json verify_json(const VerifyReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row;
        row["family"] = r.family;
        row["real_form"] = r.real_form;
        row["check"] = r.check;
        row["checked"] = r.checked;
        row["failed"] = r.failed;
        Json off = Json::array();
        for (const auto& o : r.offenders) off.push_back(o);
        row["offenders"] = off;
        rows.push_back(std::move(row));
    }
    Json j;
    j["bounds"] = Json{{"A", rep.bounds.a_rank},
                       {"BCD", rep.bounds.bcd_rank},
                       {"PQ", rep.bounds.pq_rank}};
    j["oracle_bounds"] = Json{{"A", rep.oracle_bounds.a_rank},
                              {"BCD", rep.oracle_bounds.bcd_rank},
                              {"PQ", rep.oracle_bounds.pq_rank}};
    j["with_oracle"] = rep.with_oracle;
    j["rows"] = rows;
    j["total_checked"] = rep.total_checked();
    j["total_failed"] = rep.total_failed();
    j["ok"] = rep.ok();
    return j;
}

inline std::string verify_md(const VerifyReport& rep) {
    std::ostringstream os;
    os << "| family | real form | check | checked | failed | status |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : rep.rows)
        os << "| " << r.family << " | " << r.real_form << " | " << r.check << " | " << r.checked
           << " | " << r.failed << " | " << (r.failed == 0 ? "ok" : "FAIL") << " |\n";
    os << "\nverify: " << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.rows.size() << " rows, "
       << rep.total_checked() << " checks, " << rep.total_failed() << " failures)\n";
    for (const auto& r : rep.rows)
        for (const auto& o : r.offenders) os << "  offender: " << o << "\n";
    return os.str();
}

} // namespace superflag
