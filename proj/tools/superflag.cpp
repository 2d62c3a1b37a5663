#include <CLI11.hpp>

#include <superflag/json_io.hpp>
#include <superflag/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace superflag;

namespace {

struct Options {
    std::string family, params, variant, real_form, delta, lambda;
    std::string base = "cycle";
    std::string format = "md";
    std::string output;
    std::string max_rank = "default";
    std::string oracle_max_rank;
    bool no_oracle = false;
    bool oracle_check = false;
    int jobs = 1;
    int s = 1;
    std::size_t max_steps = 0;
};

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

FamilyDescriptor make_family(const Options& o) {
    if (!o.variant.empty() && o.variant != "psl")
        throw std::invalid_argument("unknown variant '" + o.variant + "' (only: psl)");
    if (o.family.size() != 1 ||
        std::string("ABCDPQ").find(o.family[0]) == std::string::npos)
        throw std::invalid_argument("unknown family '" + o.family +
                                    "' (expected one of A, B, C, D, P, Q)");
    std::vector<int> pr;
    try {
        pr = parse_ints(o.params);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --params '" + o.params + "'");
    }
    FamilyDescriptor f;
    f.psl = o.variant == "psl";
    switch (o.family[0]) {
        case 'A': f.fam = Family::A; break;
        case 'B': f.fam = Family::B; break;
        case 'C': f.fam = Family::C; break;
        case 'D': f.fam = Family::D; break;
        case 'P': f.fam = Family::P; break;
        case 'Q': f.fam = Family::Q; break;
    }
    const bool two = f.fam == Family::A || f.fam == Family::B || f.fam == Family::D;
    if (two) {
        if (pr.size() != 2)
            throw std::invalid_argument(o.family + " takes two parameters n,m");
        f.n = pr[0];
        f.m = pr[1];
    } else if (f.fam == Family::C) {
        if (pr.size() != 1) throw std::invalid_argument("C takes one parameter m");
        f.n = 1;
        f.m = pr[0];
    } else {
        if (pr.size() != 1)
            throw std::invalid_argument(o.family + " takes one parameter n");
        f.n = pr[0];
        f.m = 0;
    }
    if (f.psl && f.fam != Family::A)
        throw std::invalid_argument("variant psl applies to the A family only");
    check_family(f);
    return f;
}

std::string pretty_code(std::string code) {
    for (auto& ch : code)
        if (ch == '_') ch = ' ';
    return code;
}

FlagType get_flag(const FamilyDescriptor& f, const std::string& text) {
    const FlagType d = parse_flag(text);
    const auto v = validate_flag_type(f, d);
    if (!v.ok()) {
        std::string msg = "invalid flag type \"" + flag_str(d) + "\" for " + f.name() + ":";
        for (const auto& e : v.errors) msg += "\n  " + pretty_code(e.code) + ": " + e.detail;
        throw std::invalid_argument(msg);
    }
    return d;
}

VerifyBounds parse_bounds(const std::string& text) {
    if (text == "default" || text.empty()) return {};
    std::size_t pos = 0;
    int k = 0;
    try {
        k = std::stoi(text, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != text.size() || k < 1)
        throw std::invalid_argument("--max-rank expects 'default' or a positive integer, got '" +
                                    text + "'");
    return {k, k, k};
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw std::invalid_argument("cannot write to '" + o.output + "'");
    out << text;
}

int cmd_classify(const Options& o) {
    const auto f = make_family(o);
    const auto rf = find_real_form(f, o.real_form);
    const auto d = get_flag(f, o.delta);
    const auto rec = classify(f, rf, d);
    Json j = record_json(rec);
    bool oracle_ok = true;
    if (o.oracle_check) {
        oracle_ok = vdetail::same_sets(phi_sets(f, rf.conv, d), stabilizer_phi(f, d, rf.conv)) &&
                    codim_oracle(f, rf.tau, d, rf.conv) ==
                        std::pair<int, int>(rec.total_codim, rec.odd_codim);
        j["oracle_agreement"] = oracle_ok;
    }
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n");
    } else {
        std::string text = record_md(rec);
        if (o.oracle_check)
            text += "\nmatrix model agreement: " + std::string(oracle_ok ? "yes" : "NO") + "\n";
        emit(o, text);
    }
    return oracle_ok ? 0 : 1;
}

int cmd_table(const Options& o) {
    const auto f = make_family(o);
    const auto rf = find_real_form(f, o.real_form);
    const auto rows = table(f, rf, o.max_steps);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& rec : rows) arr.push_back(record_json(rec));
        Json j;
        j["family"] = f.name();
        j["real_form"] = rf.key;
        j["rows"] = arr;
        emit(o, j.dump(2) + "\n");
    } else {
        std::string text = f.name() + " / " + rf.key + " (" + rf.name + ")\n\n" +
                           records_md(rows);
        emit(o, text);
    }
    return 0;
}

int cmd_h0(const Options& o) {
    const auto f = make_family(o);
    const auto d = get_flag(f, o.delta);
    H0Descriptor h;
    Json j;
    j["family"] = f.name();
    j["delta"] = flag_str(d);
    if (o.real_form.empty()) {
        h = h0_flag_supermanifold(f, d);
    } else {
        const auto rf = find_real_form(f, o.real_form);
        const auto base = BaseKind::parse(o.base);
        h = h0_flag_domain(f, rf, d, base);
        j["real_form"] = rf.key;
        j["base"] = base.str();
    }
    j["h0"] = h0_json(h);
    if (o.format == "json")
        emit(o, j.dump(2) + "\n");
    else
        emit(o, "H0 = " + h.str() + "\n");
    return 0;
}

int cmd_dft_check(const Options& o) {
    const auto f = make_family(o);
    const auto d = get_flag(f, o.delta);
    const auto c = make_dft_case(f, o.real_form, d);
    Json j = dft_case_json(c);
    if (!o.lambda.empty()) {
        const Weight lam = parse_weight(o.lambda);
        if (lam.x.size() != std::size_t(f.xr()) || lam.y.size() != std::size_t(f.yr()))
            throw std::invalid_argument("--lambda needs " + std::to_string(f.xr()) + "|" +
                                        std::to_string(f.yr()) + " coordinates for " + f.name());
        j["lambda"] = weight_str(lam);
        j["s"] = o.s;
        j["injectivity_sufficient"] = dft_injectivity_sufficient(c, lam, o.s);
        j["typical_paper"] = is_typical(f, lam, TypicalityVariant::paper_anisotropic, c.ps);
        j["typical_standard"] = is_typical(f, lam, TypicalityVariant::standard_isotropic, c.ps);
        j["genericity"] = genericity_json(genericity(f, lam, c.ps));
        if (f.fam != Family::P && f.fam != Family::Q)
            j["dominant_conjugate"] = dot_conjugate_json(dominant_dot_conjugate(f, lam, c.ps));
        if (c.parity == CycleParity::type_II) {
            const auto t2 = type_II_double_transform(c, lam);
            j["type_II"] = Json{{"double_transform", t2.double_transform},
                                {"Lambda", weight_str(t2.Lambda)}};
        }
    }
    if (o.format == "json") {
        emit(o, j.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& [key, val] : j.items())
            text += key + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
        emit(o, text);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyConfig cfg;
    cfg.bounds = parse_bounds(o.max_rank);
    cfg.oracle_bounds = o.oracle_max_rank.empty() ? cfg.bounds : parse_bounds(o.oracle_max_rank);
    cfg.with_oracle = !o.no_oracle;
    cfg.jobs = o.jobs;
    const auto rep = run_verify(cfg);
    if (o.format == "json")
        emit(o, verify_json(rep).dump(2) + "\n");
    else
        emit(o, verify_md(rep));
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag domains of real forms of classical Lie supergroups"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"md", "json"}));
    app.add_option("--output", o.output, "write the result to this file instead of stdout");
    app.add_option("--max-rank", o.max_rank,
                   "verify enumeration bound: 'default' (A: 6, B/C/D: 4, P/Q: 4) or an integer "
                   "applied to every family")
        ->envname("SUPERFLAG_MAX_RANK");
    app.add_option("--oracle-max-rank", o.oracle_max_rank,
                   "verify matrix-model bound, at most --max-rank");
    app.add_flag("--no-oracle", o.no_oracle, "skip the matrix-model sweeps in verify");
    app.add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber);

    auto add_instance = [&](CLI::App* sub, bool with_rf, bool rf_required) {
        sub->add_option("--family", o.family, "A, B, C, D, P or Q")->required();
        sub->add_option("--params", o.params,
                        "family parameters: A/B/D take n,m; C takes m; P/Q take n")
            ->required();
        sub->add_option("--variant", o.variant, "psl for the projective A(n|n) quotient");
        if (with_rf) {
            auto* opt = sub->add_option("--real-form", o.real_form,
                                        "real form key, e.g. su:1,1|1,0 or osp:2,3");
            if (rf_required) opt->required();
        }
        sub->fallthrough();
    };

    auto* classify_cmd =
        app.add_subcommand("classify", "classify one flag type for one real form");
    add_instance(classify_cmd, true, true);
    classify_cmd->add_option("--delta", o.delta, "flag type, e.g. \"1|0,2|1\"")->required();
    classify_cmd->add_flag("--oracle", o.oracle_check,
                           "cross check the verdict against the matrix model");

    auto* table_cmd =
        app.add_subcommand("table", "classify every flag type of an instance for one real form");
    add_instance(table_cmd, true, true);
    table_cmd->add_option("--max-steps", o.max_steps, "only flags with at most this many steps");

    auto* h0_cmd = app.add_subcommand(
        "h0", "global holomorphic superfunctions on a flag supermanifold or flag domain");
    add_instance(h0_cmd, true, false);
    h0_cmd
        ->add_option("--delta", o.delta,
                     "flag type; the boundary profiles read it with the ambient space appended "
                     "as a final step")
        ->required();
    h0_cmd->add_option("--base", o.base,
                       "base manifold shape for domains: cycle, hermitian, mixed:1 or mixed:2");

    auto* dft_cmd = app.add_subcommand(
        "dft-check", "cycle space data and double fibration transform predicates");
    add_instance(dft_cmd, true, true);
    dft_cmd->add_option("--delta", o.delta, "flag type of the catalogued cycle case")->required();
    dft_cmd->add_option("--lambda", o.lambda,
                        "weight \"x_1,..,x_n|y_1,..,y_m\" to test, rational entries allowed");
    dft_cmd->add_option("--s", o.s, "truncation degree for the relative weight multisets")
        ->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand(
        "verify", "run every cross-check sweep and print the pass/fail matrix");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (table_cmd->parsed()) return cmd_table(o);
        if (h0_cmd->parsed()) return cmd_h0(o);
        if (dft_cmd->parsed()) return cmd_dft_check(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
