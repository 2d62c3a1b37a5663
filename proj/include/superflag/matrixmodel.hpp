#pragma once

#include "parabolic.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace superflag {

// small dense integer matrix, row-major
struct Mat {
    int n = 0;
    std::vector<long long> a;
    static Mat zero(int n) { return {n, std::vector<long long>(std::size_t(n) * n, 0)}; }
    long long& at(int r, int c) { return a[std::size_t(r) * n + c]; }
    long long at(int r, int c) const { return a[std::size_t(r) * n + c]; }
};

struct MatrixModel {
    FamilyDescriptor fam;
    int ne = 0, no = 0; // graded dimension N0|N1
    std::vector<Weight> basis_weight;
    std::vector<int> basis_parity; // 0/1 per basis column
    // one matrix per root; queer root spaces are 1|1-dimensional and carry two
    std::vector<std::pair<Root, std::vector<Mat>>> gens;
    int dim() const { return ne + no; }
};

struct OracleBounds {
    int a_rank = 6;    // n+m for A
    int bcd_rank = 4;  // n+m for B/C/D
    int pq_rank = 4;   // n for P/Q
};

inline bool oracle_in_bounds(const FamilyDescriptor& f, const OracleBounds& b = {}) {
    switch (f.fam) {
        case Family::A: return f.n + f.m <= b.a_rank;
        case Family::B:
        case Family::C:
        case Family::D: return f.n + f.m <= b.bcd_rank;
        case Family::P:
        case Family::Q: return f.n <= b.pq_rank;
    }
    return false;
}

namespace detail {

// nullspace basis of a rational matrix given by rows over `cols` unknowns
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows,
                                               std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Rat inv = rows[rank][c];
        for (auto& v : rows[rank]) v /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rat f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<long long> primitive_integer(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const auto& r : v) {
        Int d = denominator(r);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> w;
    Int g = 0;
    for (const auto& r : v) {
        Int t = numerator(r) * (lcm / denominator(r));
        w.push_back(t);
        g = gcd(g, abs(t));
    }
    if (g == 0) g = 1;
    std::vector<long long> out;
    for (auto& t : w) out.push_back((t / g).convert_to<long long>());
    // fix the overall sign: first nonzero entry positive
    for (auto x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

// Root matrices inside the preserver algebra of the Gram matrix G:
// S(Xu,v) + (-1)^{|X||u|} S(u,Xv) = 0.
inline Mat form_preserver_root_matrix(const MatrixModel& mm,
                                      const std::vector<std::vector<int>>& G, const Root& root) {
    const int N = mm.dim();
    const int xodd = root.parity == Parity::odd ? 1 : 0;
    std::vector<std::pair<int, int>> pairs; // (target, source)
    for (int t = 0; t < N; ++t)
        for (int s = 0; s < N; ++s) {
            if (t == s) continue;
            if ((mm.basis_parity[t] ^ mm.basis_parity[s]) != xodd) continue;
            if (mm.basis_weight[t] - mm.basis_weight[s] == root.w) pairs.push_back({t, s});
        }
    if (pairs.empty())
        throw std::logic_error(mm.fam.name() + ": no matrix candidates for root " +
                               root_str(root));
    std::vector<std::vector<Rat>> rows;
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
            std::vector<Rat> row(pairs.size(), Rat(0));
            bool nonzero = false;
            const int sgn = (xodd && mm.basis_parity[u]) ? -1 : 1;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto [t, s] = pairs[p];
                Rat c = 0;
                if (s == u) c += G[t][v];
                if (s == v) c += Rat(sgn) * G[u][t];
                if (c != 0) { row[p] = c; nonzero = true; }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    auto basis = rows.empty() ? std::vector<std::vector<Rat>>{std::vector<Rat>(pairs.size(), Rat(1))}
                              : nullspace(std::move(rows), pairs.size());
    if (basis.size() != 1)
        throw std::logic_error(mm.fam.name() + ": root space dimension " +
                               std::to_string(basis.size()) + " for " + root_str(root));
    auto coef = primitive_integer(basis[0]);
    Mat X = Mat::zero(N);
    for (std::size_t p = 0; p < pairs.size(); ++p) X.at(pairs[p].first, pairs[p].second) = coef[p];
    return X;
}

} // namespace detail

inline MatrixModel realize(const FamilyDescriptor& f, const OracleBounds& bounds = {}) {
    check_family(f);
    if (!oracle_in_bounds(f, bounds))
        throw std::length_error(f.name() + ": rank above the oracle bound");
    MatrixModel mm;
    mm.fam = f;
    const int n = f.n, m = f.m;
    auto add_basis = [&](const Weight& w, int parity) {
        mm.basis_weight.push_back(w);
        mm.basis_parity.push_back(parity);
    };
    const auto roots = build_roots(f);

    switch (f.fam) {
        case Family::A: {
            mm.ne = n;
            mm.no = m;
            for (int i = 1; i <= n; ++i) add_basis(detail::ex(f, i), 0);
            for (int j = 1; j <= m; ++j) add_basis(detail::ey(f, j), 1);
            for (const auto& r : roots) {
                Mat X = Mat::zero(mm.dim());
                for (int a = 0; a < mm.dim(); ++a)
                    for (int b = 0; b < mm.dim(); ++b)
                        if (a != b && mm.basis_weight[a] - mm.basis_weight[b] == r.w)
                            X.at(a, b) = 1;
                mm.gens.push_back({r, {X}});
            }
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            const int k = (f.fam == Family::B) ? 2 * n + 1 : (f.fam == Family::C ? 2 : 2 * n);
            const int half = k / 2;
            mm.ne = k;
            mm.no = 2 * m;
            for (int i = 1; i <= k; ++i) {
                Weight w = Weight::zero(f.xr(), f.yr());
                if (i <= half) w.x[i - 1] = 1;
                else if (k + 1 - i <= half) w.x[k - i] = -1;
                add_basis(w, 0);
            }
            for (int l = 1; l <= 2 * m; ++l) {
                Weight w = Weight::zero(f.xr(), f.yr());
                if (l <= m) w.y[l - 1] = 1;
                else w.y[2 * m - l] = -1;
                add_basis(w, 1);
            }
            std::vector<std::vector<int>> G(mm.dim(), std::vector<int>(mm.dim(), 0));
            for (int i = 1; i <= k; ++i) G[i - 1][k - i] = 1; // S(e_i, e_{k+1-i})
            for (int l = 1; l <= 2 * m; ++l)
                G[k + l - 1][k + 2 * m - l] = (l <= m) ? 1 : -1; // S(f_l, f_{2m+1-l})
            for (const auto& r : roots)
                mm.gens.push_back({r, {detail::form_preserver_root_matrix(mm, G, r)}});
            break;
        }
        case Family::P: {
            mm.ne = n;
            mm.no = n;
            for (int i = 1; i <= n; ++i) add_basis(-detail::ex(f, i), 0); // wt(e_i) = -x_i
            for (int l = 1; l <= n; ++l) add_basis(detail::ex(f, l), 1);  // wt(f_l) = +x_l
            std::vector<std::vector<int>> G(mm.dim(), std::vector<int>(mm.dim(), 0));
            for (int i = 0; i < n; ++i) {
                G[i][n + i] = 1;  // omega(e_i, f_i)
                G[n + i][i] = -1; // odd antisymmetric
            }
            for (const auto& r : roots)
                mm.gens.push_back({r, {detail::form_preserver_root_matrix(mm, G, r)}});
            break;
        }
        case Family::Q: {
            mm.ne = n;
            mm.no = n;
            for (int i = 1; i <= n; ++i) add_basis(detail::ex(f, i), 0);
            for (int i = 1; i <= n; ++i) add_basis(detail::ex(f, i), 1);
            for (const auto& r : roots) {
                int ia = 0, ib = 0;
                for (int i = 0; i < n; ++i) {
                    if (r.w.x[i] == 1) ia = i;
                    else if (r.w.x[i] == -1) ib = i;
                }
                Mat Xe = Mat::zero(mm.dim()), Xo = Mat::zero(mm.dim());
                Xe.at(ia, ib) = 1;
                Xe.at(n + ia, n + ib) = 1;
                Xo.at(n + ia, ib) = 1;
                Xo.at(ia, n + ib) = 1;
                mm.gens.push_back({r, {Xe, Xo}});
            }
            break;
        }
    }
    return mm;
}

// basis-index span per flag step
inline std::vector<std::vector<int>> flag_spans(const FamilyDescriptor& f, const FlagType& d,
                                                FlagConvention conv = {}) {
    detail::require_valid(f, d);
    const int m = f.fam == Family::Q || f.fam == Family::P ? f.n : f.m;
    int ne = 0;
    switch (f.fam) {
        case Family::A: ne = f.n; break;
        case Family::B: ne = 2 * f.n + 1; break;
        case Family::C: ne = 2; break;
        case Family::D: ne = 2 * f.n; break;
        case Family::P:
        case Family::Q: ne = f.n; break;
    }
    std::vector<std::vector<int>> spans;
    for (const auto& s : d.steps) {
        std::vector<int> w;
        for (int i = 0; i < s.d0; ++i) w.push_back(i);
        if (f.fam == Family::P) {
            for (int j = f.n - s.d1; j < f.n; ++j) w.push_back(ne + j);
        } else if (f.fam == Family::Q) {
            for (int j = 0; j < s.d1; ++j) w.push_back(ne + j); // pi-invariant: paired prefix
        } else if (conv.reverse_y) {
            for (int j = m - s.d1; j < m; ++j) w.push_back(ne + j);
        } else {
            for (int j = 0; j < s.d1; ++j) w.push_back(ne + j);
        }
        spans.push_back(std::move(w));
    }
    return spans;
}

namespace detail {
inline bool preserves(const Mat& X, const std::vector<int>& span, int dim) {
    std::vector<bool> in(dim, false);
    for (int i : span) in[i] = true;
    for (int s : span)
        for (int r = 0; r < dim; ++r)
            if (!in[r] && X.at(r, s) != 0) return false;
    return true;
}
} // namespace detail

inline PhiSets stabilizer_phi(const FamilyDescriptor& f, const FlagType& d,
                              FlagConvention conv = {}, const OracleBounds& bounds = {}) {
    const MatrixModel mm = realize(f, bounds);
    const auto spans = flag_spans(f, d, conv);
    const auto sigma = build_roots(f);
    PhiSets out;
    for (const auto& [root, mats] : mm.gens) {
        bool keeps = true;
        for (const auto& X : mats)
            for (const auto& w : spans)
                if (!detail::preserves(X, w, mm.dim())) { keeps = false; break; }
        (keeps ? out.phi : out.phi_c).push_back(root);
    }
    for (const auto& r : out.phi) {
        Root neg{-r.w, r.parity};
        const bool levi = contains_root(sigma, neg) &&
                          std::binary_search(out.phi.begin(), out.phi.end(), neg);
        (levi ? out.phi_r : out.phi_n).push_back(r);
    }
    return out;
}

// codim of the real orbit through the standard flag: roots outside Phi u tauPhi.
// tau is any involutive root map; "both" parity counts once toward each tally.
template <typename TauFn>
std::pair<int, int> codim_oracle(const FamilyDescriptor& f, TauFn&& tau, const FlagType& d,
                                 FlagConvention conv = {}, const OracleBounds& bounds = {}) {
    const PhiSets ps = stabilizer_phi(f, d, conv, bounds);
    auto in_phi = [&](const Root& r) {
        return std::binary_search(ps.phi.begin(), ps.phi.end(), r);
    };
    int total = 0, odd = 0;
    for (const auto& r : build_roots(f)) {
        if (in_phi(r) || in_phi(tau(r))) continue;
        ++total;
        if (r.parity != Parity::even) ++odd;
    }
    return {total, odd};
}

} // namespace superflag
