#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace superflag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// canonical form: "p" or "p/q", q > 0, gcd(p,q) = 1 (cpp_rational keeps it reduced)
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!ok_int(s)) throw std::invalid_argument("bad rational: " + s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den)) throw std::invalid_argument("bad rational: " + s);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(Int(num)) / Rat(d);
}

} // namespace superflag
