#pragma once

#include "weight.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace superflag {

// "both" marks the 1|1-dimensional root spaces of the queer family.
enum class Parity { even, odd, both };

inline const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::both: return "both";
    }
    return "?";
}

inline Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (s == "both") return Parity::both;
    throw std::invalid_argument("bad parity: " + s);
}

struct Root {
    Weight w;
    Parity parity = Parity::even;

    friend bool operator==(const Root&, const Root&) = default;
};

inline int cmp(const Root& a, const Root& b) {
    if (int c = cmp(a.w, b.w)) return c;
    return int(a.parity) - int(b.parity);
}

inline bool operator<(const Root& a, const Root& b) { return cmp(a, b) < 0; }

inline std::string root_str(const Root& r) {
    return weight_str(r.w) + ":" + parity_name(r.parity);
}

// Sum over evens minus sum over odds; "both" contributes zero.
inline Weight graded_sum(const std::vector<Root>& roots, std::size_t n, std::size_t m) {
    Weight s = Weight::zero(n, m);
    for (const auto& r : roots) {
        if (r.parity == Parity::even) s = s + r.w;
        else if (r.parity == Parity::odd) s = s - r.w;
    }
    return s;
}

} // namespace superflag
