#pragma once

#include "parabolic.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superflag {

// which summary-table row governs the verdicts of a real form
enum class TableKey {
    sl_real,
    su,
    pq0,
    uspi,
    osp_even,
    osp_oo,
    osp_star,
    p_real,
    q_reversal,
    q_unitary,
};

inline const char* table_key_name(TableKey k) {
    switch (k) {
        case TableKey::sl_real: return "sl_real";
        case TableKey::su: return "su";
        case TableKey::pq0: return "0pq";
        case TableKey::uspi: return "uspi";
        case TableKey::osp_even: return "osp_even";
        case TableKey::osp_oo: return "osp_odd_odd";
        case TableKey::osp_star: return "osp_star";
        case TableKey::p_real: return "p_real";
        case TableKey::q_reversal: return "q_reversal";
        case TableKey::q_unitary: return "q_unitary";
    }
    return "?";
}

// signed permutation of the basis functionals, applied linearly to weights
struct TauAction {
    struct Image {
        int sign = 1;
        bool to_y = false;
        int index = 0; // 0-based within the target block
        bool operator==(const Image&) const = default;
    };
    std::vector<Image> x_img, y_img;
    bool operator==(const TauAction&) const = default;

    Weight apply(const Weight& w) const {
        Weight out = Weight::zero(x_img.size(), y_img.size());
        auto put = [&](const Image& im, const Rat& c) {
            auto& slot = im.to_y ? out.y[im.index] : out.x[im.index];
            slot += Rat(im.sign) * c;
        };
        for (std::size_t i = 0; i < w.x.size(); ++i) put(x_img[i], w.x[i]);
        for (std::size_t j = 0; j < w.y.size(); ++j) put(y_img[j], w.y[j]);
        return out;
    }
    Root operator()(const Root& r) const { return {apply(r.w), r.parity}; }
};

inline TauAction tau_neg_id(int n, int m) {
    TauAction t;
    for (int i = 0; i < n; ++i) t.x_img.push_back({-1, false, i});
    for (int j = 0; j < m; ++j) t.y_img.push_back({-1, true, j});
    return t;
}

inline TauAction tau_reversal(int n, int m) {
    TauAction t;
    for (int i = 0; i < n; ++i) t.x_img.push_back({1, false, n - 1 - i});
    for (int j = 0; j < m; ++j) t.y_img.push_back({1, true, m - 1 - j});
    return t;
}

inline TauAction tau_swap_xy(int n) {
    TauAction t;
    for (int i = 0; i < n; ++i) t.x_img.push_back({1, true, i});
    for (int j = 0; j < n; ++j) t.y_img.push_back({1, false, j});
    return t;
}

inline TauAction tau_neg_swap(int n) {
    TauAction t;
    for (int i = 0; i < n; ++i) t.x_img.push_back({-1, true, i});
    for (int j = 0; j < n; ++j) t.y_img.push_back({-1, false, j});
    return t;
}

inline TauAction tau_fix_last(int n, int m) {
    TauAction t = tau_neg_id(n, m);
    t.x_img[n - 1] = {1, false, n - 1};
    return t;
}

enum class RealFormKind { real, even_real };

struct RealFormDescriptor {
    std::string key;  // stable CLI key, e.g. "su:1,2|1,1"
    std::string name; // display name
    RealFormKind kind = RealFormKind::real;
    TableKey table = TableKey::su;
    TauAction tau;
    FlagConvention conv;
    std::vector<int> params;
    std::string partner_key; // even-real rows: key of the associated real form
};

namespace detail {

inline std::string join_params(const std::vector<int>& p, bool bar_split) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << (bar_split && i == 2 ? '|' : ',');
        os << p[i];
    }
    return os.str();
}

} // namespace detail

inline std::vector<RealFormDescriptor> catalog(const FamilyDescriptor& f) {
    check_family(f);
    std::vector<RealFormDescriptor> out;
    const int n = f.n, m = f.m;
    auto add = [&](RealFormDescriptor d) { out.push_back(std::move(d)); };

    switch (f.fam) {
        case Family::A: {
            const char* pre = f.psl ? "p" : "";
            const bool mixed_rh = n % 2 == 0 || m % 2 == 0; // H factor needs one even block
            for (int p = 0; 2 * p <= n; ++p) {
                const int q = n - p;
                const int rmax = (p == q) ? m / 2 : m;
                for (int r = 0; r <= rmax; ++r) {
                    const int s = m - r;
                    std::vector<int> pr{p, q, r, s};
                    add({"su:" + detail::join_params(pr, true),
                         std::string(pre) + "su(" + detail::join_params(pr, true) + ")",
                         RealFormKind::real, TableKey::su, tau_neg_id(n, m), {}, pr,
                         "even_su:" + detail::join_params(pr, true)});
                }
            }
            add({"sl_R", std::string(pre) + "sl(" + std::to_string(n) + "|" + std::to_string(m) +
                             ",R)",
                 RealFormKind::real, TableKey::sl_real, tau_reversal(n, m), {}, {},
                 mixed_rh ? "even_sl_RH" : ""});
            if (n % 2 == 0 && m % 2 == 0)
                add({"sl_H", std::string(pre) + "sl(" + std::to_string(n / 2) + "|" +
                                 std::to_string(m / 2) + ",H)",
                     RealFormKind::real, TableKey::sl_real, tau_reversal(n, m), {}, {},
                     "even_sl_RH"});
            if (f.psl) {
                add({"0pq", "0pq(" + std::to_string(n) + ")", RealFormKind::real, TableKey::pq0,
                     tau_swap_xy(n), {true}, {}, "even_slC"});
                add({"uspi", "uspi(" + std::to_string(n) + ")", RealFormKind::real,
                     TableKey::uspi, tau_neg_swap(n), {}, {}, ""});
            }
            for (int p = 0; 2 * p <= n; ++p) {
                const int q = n - p;
                const int rmax = (p == q) ? m / 2 : m;
                for (int r = 0; r <= rmax; ++r) {
                    std::vector<int> pr{p, q, r, m - r};
                    add({"even_su:" + detail::join_params(pr, true),
                         "SU(" + std::to_string(p) + "," + std::to_string(q) + ")xSU(" +
                             std::to_string(r) + "," + std::to_string(m - r) + ")xU(1)",
                         RealFormKind::even_real, TableKey::su, tau_neg_id(n, m), {}, pr,
                         "su:" + detail::join_params(pr, true)});
                }
            }
            if (mixed_rh)
                add({"even_sl_RH",
                     m % 2 == 0 ? "SL(" + std::to_string(n) + ",R)xSL(" + std::to_string(m / 2) +
                                      ",H)"
                                : "SL(" + std::to_string(n / 2) + ",H)xSL(" + std::to_string(m) +
                                      ",R)",
                     RealFormKind::even_real, TableKey::sl_real, tau_reversal(n, m), {}, {},
                     "sl_R"});
            if (f.psl)
                add({"even_slC", "SL(" + std::to_string(n) + ",C)", RealFormKind::even_real,
                     TableKey::pq0, tau_swap_xy(n), {true}, {}, "0pq"});
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            const int k = f.fam == Family::B ? 2 * n + 1 : (f.fam == Family::C ? 2 : 2 * n);
            auto so_partner = [&](int p, int q) {
                if (p % 2 == 1 && q % 2 == 1)
                    return f.fam == Family::C ? std::string("osp11")
                                              : "osp_oo:" + detail::join_params({p, q}, false);
                return "osp:" + detail::join_params({p, q}, false);
            };
            for (int p = 0; 2 * p <= k; ++p) {
                const int q = k - p;
                const bool odd_odd = (p % 2 == 1) && (q % 2 == 1);
                std::vector<int> pr{p, q};
                std::string name = "osp(" + std::to_string(p) + "," + std::to_string(q) + "|" +
                                   std::to_string(2 * m) + ")";
                add({odd_odd ? (f.fam == Family::C ? "osp11"
                                                   : "osp_oo:" + detail::join_params(pr, false))
                             : "osp:" + detail::join_params(pr, false),
                     name, RealFormKind::real, odd_odd ? TableKey::osp_oo : TableKey::osp_even,
                     odd_odd ? tau_fix_last(n, m) : tau_neg_id(n, m), {}, pr,
                     "even_so_sp:" + detail::join_params({p, q, 0, m}, false)});
            }
            for (int r = 0; 2 * r <= m; ++r) {
                const int s = m - r;
                std::vector<int> pr{r, s};
                add({"osp_star:" + detail::join_params(pr, false),
                     "osp*(" + std::to_string(k) + "|" + std::to_string(2 * r) + "," +
                         std::to_string(2 * s) + ")",
                     RealFormKind::real, TableKey::osp_star, tau_neg_id(n, m), {}, pr,
                     k % 2 == 0 ? "even_sostar_sp" : ""});
            }
            for (int p = 0; 2 * p <= k; ++p)
                for (int r = 0; 2 * r <= m; ++r) {
                    const int q = k - p, s = m - r;
                    const bool odd_odd = (p % 2 == 1) && (q % 2 == 1);
                    std::vector<int> pr{p, q, r, s};
                    add({"even_so_sp:" + detail::join_params(pr, false),
                         "SO(" + std::to_string(p) + "," + std::to_string(q) + ")xSp(" +
                             std::to_string(2 * r) + "," + std::to_string(2 * s) + ")",
                         RealFormKind::even_real,
                         odd_odd ? TableKey::osp_oo : TableKey::osp_even,
                         odd_odd ? tau_fix_last(n, m) : tau_neg_id(n, m), {}, pr,
                         so_partner(p, q)});
                }
            if (k % 2 == 0)
                add({"even_sostar_sp",
                     "SO*(" + std::to_string(k) + ")xSp(" + std::to_string(2 * m) + ",R)",
                     RealFormKind::even_real, TableKey::osp_star, tau_neg_id(n, m), {}, {},
                     "osp_star:" + detail::join_params({0, m}, false)});
            break;
        }
        case Family::P: {
            add({"p_R", "P(" + std::to_string(n) + ",R)", RealFormKind::real, TableKey::p_real,
                 tau_reversal(n, 0), {}, {}, ""});
            if (n % 2 == 0)
                add({"p_H", "P(" + std::to_string(n) + ",H)", RealFormKind::real,
                     TableKey::p_real, tau_reversal(n, 0), {}, {}, ""});
            break;
        }
        case Family::Q: {
            add({"q_R", "Q(" + std::to_string(n) + ",R)", RealFormKind::real,
                 TableKey::q_reversal, tau_reversal(n, 0), {}, {}, ""});
            if (n % 2 == 0)
                add({"q_H", "Q(" + std::to_string(n) + ",H)", RealFormKind::real,
                     TableKey::q_reversal, tau_reversal(n, 0), {}, {}, ""});
            for (int p = 0; 2 * p <= n; ++p) {
                std::vector<int> pr{p, n - p};
                add({"upq:" + detail::join_params(pr, false),
                     "UQ(" + std::to_string(p) + "," + std::to_string(n - p) + ")",
                     RealFormKind::real, TableKey::q_unitary, tau_neg_id(n, 0), {}, pr, ""});
            }
            break;
        }
    }
    return out;
}

namespace detail {

inline std::vector<int> parse_params(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == '|') {
            if (cur.empty()) throw std::invalid_argument("bad real-form parameters: " + s);
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit((unsigned char)c)) {
            cur += c;
        } else {
            throw std::invalid_argument("bad real-form parameters: " + s);
        }
    }
    return out;
}

// canonical form of a key: signature pairs ordered p <= q.  su-type keys flip
// both pairs at once (one overall conjugation); even_so_sp factors flip
// independently.
inline std::string canonical_key(const std::string& key) {
    auto colon = key.find(':');
    if (colon == std::string::npos) return key;
    std::string base = key.substr(0, colon);
    auto pr = parse_params(key.substr(colon + 1));
    if (pr.size() == 4 && (base == "su" || base == "even_su")) {
        if (pr[0] > pr[1] || (pr[0] == pr[1] && pr[2] > pr[3])) {
            std::swap(pr[0], pr[1]);
            std::swap(pr[2], pr[3]);
        }
        return base + ":" + join_params(pr, true);
    }
    if (pr.size() == 4) {
        if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
        if (pr[2] > pr[3]) std::swap(pr[2], pr[3]);
        return base + ":" + join_params(pr, false);
    }
    if (pr.size() == 2) {
        if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
        return base + ":" + join_params(pr, false);
    }
    return key;
}

} // namespace detail

inline RealFormDescriptor find_real_form(const FamilyDescriptor& f, const std::string& key) {
    const std::string canon = detail::canonical_key(key);
    auto cat = catalog(f);
    for (auto& rf : cat)
        if (rf.key == canon) return rf;
    std::string known;
    for (const auto& rf : cat) known += (known.empty() ? "" : ", ") + rf.key;
    throw std::invalid_argument("unknown real form '" + key + "' for " + f.name() +
                                "; catalogued: " + known);
}

// even real form -> the real form acting identically on the root system
inline std::optional<RealFormDescriptor> associated_real_form(const FamilyDescriptor& f,
                                                              const RealFormDescriptor& rf) {
    if (rf.partner_key.empty()) return std::nullopt;
    return find_real_form(f, rf.partner_key);
}

} // namespace superflag
