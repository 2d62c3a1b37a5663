#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "dft.hpp"
#include "superfun.hpp"

namespace superflag {

using Json = nlohmann::ordered_json;

// "a,b|c" or "(a,b|c)", entries rational; an empty side is allowed
inline Weight parse_weight(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '(') t.erase(t.begin());
    if (!t.empty() && t.back() == ')') t.pop_back();
    const auto bar = t.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("weight needs the shape 'x_1,..,x_n|y_1,..,y_m': " + text);
    auto side = [&](const std::string& part) {
        std::vector<Rat> out;
        if (part.empty()) return out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
        return out;
    };
    Weight w;
    w.x = side(t.substr(0, bar));
    w.y = side(t.substr(bar + 1));
    return w;
}

inline Json roots_json(std::vector<Root> v) {
    std::sort(v.begin(), v.end(), [](const Root& a, const Root& b) { return cmp(a, b) < 0; });
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(root_str(r));
    return arr;
}

inline Json phi_json(const PhiSets& ps) {
    return Json{{"phi", roots_json(ps.phi)},
                {"phi_r", roots_json(ps.phi_r)},
                {"phi_n", roots_json(ps.phi_n)},
                {"phi_c", roots_json(ps.phi_c)}};
}

inline Json record_json(const ClassificationRecord& rec) {
    Json j;
    j["family"] = rec.fam.name();
    j["real_form"] = rec.rf.key;
    j["real_form_name"] = rec.rf.name;
    j["delta"] = flag_str(rec.flag);
    j["total_codim"] = rec.total_codim;
    j["odd_codim"] = rec.odd_codim;
    j["max_odd_dim"] = rec.max_odd_dim;
    j["base_measurable"] = rec.base_measurable;
    j["weakly_measurable"] = rec.berezinian_invariant;
    j["strongly_measurable"] = rec.strongly_measurable;
    j["table_prediction"] = Json{{"max_odd_dim", rec.table_prediction.max_odd_dim},
                                 {"weakly_measurable", rec.table_prediction.berezinian_invariant},
                                 {"strongly_measurable", rec.table_prediction.strongly_measurable}};
    j["agreement"] = rec.agreement;
    j["note"] = rec.note;
    return j;
}

inline Json h0_json(const H0Descriptor& h) {
    Json j;
    j["kind"] = h0_kind_name(h.kind);
    j["generators"] = h.k;
    j["base_marker"] = h.base_marker;
    j["display"] = h.str();
    return j;
}

inline Json genericity_json(const GenericityReport& g) {
    return Json{{"gamma_plus", g.gamma_plus}, {"gamma_tilde", g.gamma_tilde},
                {"generic", g.generic}};
}

inline Json dot_conjugate_json(const DotConjugate& dc) {
    Json j;
    j["singular"] = dc.singular;
    j["w_length"] = dc.w_length;
    j["Lambda"] = weight_str(dc.Lambda);
    return j;
}

inline Json dft_case_json(const DFTCase& c) {
    Json j;
    j["family"] = c.fam.name();
    j["real_form"] = c.rf.key;
    j["delta"] = flag_str(c.delta);
    j["K"] = c.label;
    j["cycle_parity"] = cycle_parity_name(c.parity);
    j["sigma_k"] = roots_json(c.sigma_k);
    j["r_plus_k"] = roots_json(c.r_plus_k);
    j["rho_k"] = weight_str(c.rho_k);
    if (c.gamma_sigma) j["gamma_sigma"] = root_str(*c.gamma_sigma);
    return j;
}

// ---- markdown -------------------------------------------------------------

inline std::string md_bool(bool b) { return b ? "yes" : "no"; }

// columns follow the summary tables: one row per flag type
inline std::string records_md(const std::vector<ClassificationRecord>& rows) {
    std::ostringstream os;
    os << "| delta | codim | odd codim | max odd dim | weakly meas. | strongly meas. | agrees "
          "|\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
        os << "| `" << flag_str(r.flag) << "` | " << r.total_codim << " | " << r.odd_codim
           << " | " << md_bool(r.max_odd_dim) << " | " << md_bool(r.berezinian_invariant)
           << " | " << md_bool(r.strongly_measurable) << " | " << md_bool(r.agreement) << " |\n";
    return os.str();
}

inline std::string record_md(const ClassificationRecord& rec) {
    std::ostringstream os;
    os << rec.fam.name() << " / " << rec.rf.key << " / delta `" << flag_str(rec.flag) << "`\n\n";
    os << records_md({rec});
    if (!rec.note.empty()) os << "\nnote: " << rec.note << "\n";
    return os.str();
}

} // namespace superflag
