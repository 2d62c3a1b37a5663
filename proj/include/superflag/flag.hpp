#pragma once

#include "family.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superflag {

struct FlagStep {
    int d0 = 0, d1 = 0;
    friend auto operator<=>(const FlagStep&, const FlagStep&) = default;
};

// product order, strict
inline bool step_lt(const FlagStep& a, const FlagStep& b) {
    return a.d0 <= b.d0 && a.d1 <= b.d1 && (a.d0 < b.d0 || a.d1 < b.d1);
}

struct FlagType {
    std::vector<FlagStep> steps;
    friend auto operator<=>(const FlagType&, const FlagType&) = default;

    bool contains(int d0, int d1) const {
        for (const auto& s : steps)
            if (s.d0 == d0 && s.d1 == d1) return true;
        return false;
    }
};

// text form "d0|d1,d0|d1,..."
inline std::string flag_str(const FlagType& d) {
    std::string s;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d.steps[i].d0) + "|" + std::to_string(d.steps[i].d1);
    }
    return s;
}

inline FlagType parse_flag(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty flag type");
    FlagType d;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(pos, comma - pos);
        auto bar = part.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("flag step needs the form d0|d1: " + part);
        try {
            d.steps.push_back({std::stoi(part.substr(0, bar)), std::stoi(part.substr(bar + 1))});
        } catch (const std::exception&) {
            throw std::invalid_argument("bad flag step: " + part);
        }
        pos = comma + 1;
    }
    return d;
}

// Grid ceiling for steps: A uses (n,m); isotropic B/C/D use (n,m); P and Q use (n,n).
inline FlagStep grid_max(const FamilyDescriptor& f) {
    switch (f.fam) {
        case Family::A:
        case Family::B:
        case Family::D: return {f.n, f.m};
        case Family::C: return {1, f.m};
        case Family::P:
        case Family::Q: return {f.n, f.n};
    }
    return {0, 0};
}

// For A, P, Q the point grid_max is the whole space and is excluded as a step;
// for B/C/D it is the maximal isotropic step and stays admissible.
inline bool full_space_excluded(const FamilyDescriptor& f) {
    return f.fam == Family::A || f.fam == Family::P || f.fam == Family::Q;
}

struct FlagViolation {
    std::string code;
    std::string detail;
};

struct FlagValidation {
    std::vector<FlagViolation> errors;
    std::vector<std::string> notes;
    bool ok() const { return errors.empty(); }
    std::string describe() const {
        std::string s;
        for (const auto& e : errors) {
            if (!s.empty()) s += "; ";
            s += e.code + ": " + e.detail;
        }
        return s;
    }
};

inline FlagValidation validate_flag_type(const FamilyDescriptor& f, const FlagType& d) {
    check_family(f);
    FlagValidation v;
    auto err = [&](std::string code, std::string detail) {
        v.errors.push_back({std::move(code), std::move(detail)});
    };
    if (d.steps.empty()) {
        err("empty", "a flag type needs at least one step");
        return v;
    }
    const FlagStep hi = grid_max(f);
    for (const auto& s : d.steps) {
        if (s.d0 < 0 || s.d1 < 0 || s.d0 > hi.d0 || s.d1 > hi.d1)
            err("bounds", std::to_string(s.d0) + "|" + std::to_string(s.d1) +
                              " outside the grid 0|0.." + std::to_string(hi.d0) + "|" +
                              std::to_string(hi.d1));
        if (s.d0 == 0 && s.d1 == 0) err("endpoint", "0|0 is not a step");
        if (full_space_excluded(f) && s.d0 == hi.d0 && s.d1 == hi.d1)
            err("endpoint", std::to_string(hi.d0) + "|" + std::to_string(hi.d1) +
                                " is the whole space, not a step");
        if (f.fam == Family::Q && s.d0 != s.d1)
            err("q_diagonal", std::to_string(s.d0) + "|" + std::to_string(s.d1) +
                                  " breaks d0 = d1");
    }
    for (std::size_t i = 0; i + 1 < d.steps.size(); ++i)
        if (!step_lt(d.steps[i], d.steps[i + 1]))
            err("not_a_chain", std::to_string(d.steps[i].d0) + "|" + std::to_string(d.steps[i].d1) +
                                   " does not precede " + std::to_string(d.steps[i + 1].d0) + "|" +
                                   std::to_string(d.steps[i + 1].d1) + " in the product order");
    if (!v.ok()) return v;

    if (f.fam == Family::B || f.fam == Family::C || f.fam == Family::D) {
        // Perp completion in the ambient space is implicit; report it.
        const int k = (f.fam == Family::D) ? 2 * f.n : 2 * f.n + 1;
        std::string note = "perp completion adds ambient steps:";
        for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
            note += " " + std::to_string(k - it->d0) + "|" + std::to_string(2 * f.m - it->d1);
        v.notes.push_back(note);
    }
    if (f.fam == Family::P) {
        std::string note = "odd-symmetric closure:";
        for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
            note += " " + std::to_string(f.n - it->d1) + "|" + std::to_string(f.n - it->d0);
        v.notes.push_back(note);
    }
    return v;
}

struct SymmetryProfile {
    bool even_symmetric = false;
    bool even_symmetrizable = false;
    bool odd_symmetric = false;   // only meaningful on a square grid
    bool odd_symmetrizable = false;
    bool pi_symmetric = false;
};

namespace detail {
// mirror lands on an endpoint -> drop it (closure counts endpoints as present)
inline std::optional<FlagStep> interior(const FamilyDescriptor& f, FlagStep s) {
    const FlagStep hi = grid_max(f);
    if (s.d0 == 0 && s.d1 == 0) return std::nullopt;
    if (full_space_excluded(f) && s == hi) return std::nullopt;
    return s;
}

inline bool chain_after_merge(const FamilyDescriptor& f, const FlagType& d,
                              FlagStep (*mirror)(const FamilyDescriptor&, FlagStep)) {
    std::vector<FlagStep> all = d.steps;
    for (const auto& s : d.steps)
        if (auto t = interior(f, mirror(f, s))) all.push_back(*t);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (!step_lt(all[i], all[i + 1])) return false;
    return true;
}

inline bool closed_under(const FamilyDescriptor& f, const FlagType& d,
                         FlagStep (*mirror)(const FamilyDescriptor&, FlagStep)) {
    for (const auto& s : d.steps) {
        auto t = interior(f, mirror(f, s));
        if (t && !d.contains(t->d0, t->d1)) return false;
    }
    return true;
}

inline FlagStep even_mirror(const FamilyDescriptor& f, FlagStep s) {
    const FlagStep hi = grid_max(f);
    return {hi.d0 - s.d0, hi.d1 - s.d1};
}

inline FlagStep odd_mirror(const FamilyDescriptor& f, FlagStep s) {
    const FlagStep hi = grid_max(f);
    return {hi.d1 - s.d1, hi.d0 - s.d0}; // square grid only
}
} // namespace detail

inline SymmetryProfile symmetry_profile(const FamilyDescriptor& f, const FlagType& d) {
    SymmetryProfile p;
    p.even_symmetric = detail::closed_under(f, d, detail::even_mirror);
    p.even_symmetrizable = detail::chain_after_merge(f, d, detail::even_mirror);
    const FlagStep hi = grid_max(f);
    if (hi.d0 == hi.d1) {
        p.odd_symmetric = detail::closed_under(f, d, detail::odd_mirror);
        p.odd_symmetrizable = detail::chain_after_merge(f, d, detail::odd_mirror);
    }
    p.pi_symmetric = true;
    for (const auto& s : d.steps)
        if (s.d0 != s.d1) p.pi_symmetric = false;
    return p;
}

// All admissible grid points, lexicographically ordered.
inline std::vector<FlagStep> flag_grid(const FamilyDescriptor& f) {
    const FlagStep hi = grid_max(f);
    std::vector<FlagStep> pts;
    for (int a = 0; a <= hi.d0; ++a)
        for (int b = 0; b <= hi.d1; ++b) {
            FlagStep s{a, b};
            if (s.d0 == 0 && s.d1 == 0) continue;
            if (full_space_excluded(f) && s == hi) continue;
            if (f.fam == Family::Q && a != b) continue;
            pts.push_back(s);
        }
    return pts;
}

// number of nonempty chains in the admissible grid
inline std::uint64_t count_flag_types(const FamilyDescriptor& f) {
    auto pts = flag_grid(f);
    // chains[i] = chains starting at pts[i]
    std::vector<std::uint64_t> chains(pts.size(), 0);
    for (std::size_t i = pts.size(); i-- > 0;) {
        chains[i] = 1;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (step_lt(pts[i], pts[j])) chains[i] += chains[j];
    }
    std::uint64_t total = 0;
    for (auto c : chains) total += c;
    return total;
}

// Every valid flag type, lexicographic in the step sequence.
inline std::vector<FlagType> enumerate_flag_types(const FamilyDescriptor& f,
                                                  std::uint64_t refuse_above = 2'000'000) {
    check_family(f);
    const std::uint64_t count = count_flag_types(f);
    if (count > refuse_above)
        throw std::length_error(f.name() + ": " + std::to_string(count) +
                                " flag types exceed the enumeration bound " +
                                std::to_string(refuse_above));
    auto pts = flag_grid(f);
    std::vector<FlagType> out;
    out.reserve(count);
    std::vector<FlagStep> cur;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < pts.size(); ++i) {
            if (!cur.empty() && !step_lt(cur.back(), pts[i])) continue;
            cur.push_back(pts[i]);
            out.push_back({cur});
            self(self, i + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

} // namespace superflag
