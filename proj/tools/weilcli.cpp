#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weil/factorize.hpp"
#include "weil/matrix_rep.hpp"
#include "weil/table.hpp"
#include "weil/verify.hpp"

using nlohmann::json;
using namespace weil;

namespace {

struct CommonOpts {
    int q = 3;
    int n = 1;
    std::string modulus;  // comma-separated c0,...,ce
    std::string config;   // optional JSON config path
    uint64_t cap = 60000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--q", o.q, "Field size q = p^e (odd p)")->required();
    cmd->add_option("--n", o.n, "Half the dimension of V (V = GF(q)^{2n})");
    cmd->add_option("--modulus", o.modulus,
                    "Field modulus coefficients c0,...,ce (comma separated)");
    cmd->add_option("--config", o.config,
                    "JSON config file: {\"modulus\": [...], \"cap\": N}");
}

std::pair<int, int> prime_power(int q) {
    if (q < 2) throw std::invalid_argument("unsupported characteristic");
    int p = q;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw std::invalid_argument("unsupported characteristic");
    return {p, e};
}

FieldPtr make_field_from(CommonOpts& o) {
    std::optional<std::vector<int>> modulus;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::invalid_argument("cannot read config file");
        json cfg = json::parse(in);
        if (cfg.contains("modulus")) modulus = cfg["modulus"].get<std::vector<int>>();
        if (cfg.contains("cap")) o.cap = cfg["cap"].get<uint64_t>();
    }
    if (!o.modulus.empty()) {
        std::vector<int> coeffs;
        std::stringstream ss(o.modulus);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
        modulus = std::move(coeffs);
    }
    const auto [p, e] = prime_power(o.q);
    return FieldDesc::make(p, e, modulus);
}

json cyc_json(const CycNumber& z) { return json(z.coord_strings()); }

std::string cyc_csv(const CycNumber& z) {
    std::string out;
    for (const auto& s : z.coord_strings()) {
        if (!out.empty()) out += ';';
        out += s;
    }
    return out;
}

json mat_json(const FMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

GroupElement parse_group_element(const SympSpace& sp, const std::string& text) {
    const json j = json::parse(text);
    FMatrix m(sp.field(), sp.dim(), sp.dim());
    if (!j.is_array() || static_cast<int>(j.size()) != sp.dim())
        throw std::invalid_argument("shape mismatch");
    for (int i = 0; i < sp.dim(); ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != sp.dim())
            throw std::invalid_argument("shape mismatch");
        for (int k = 0; k < sp.dim(); ++k) {
            const long v = j[i][k].get<long>();
            // Nonnegative entries are taken as canonical encodings;
            // negative integers map through Z -> GF(p).
            m.at(i, k) = (v >= 0 && v < sp.field()->q())
                             ? static_cast<uint32_t>(v)
                             : sp.field()->from_int(v);
        }
    }
    return {sp, std::move(m)};
}

json weil_values_json(const WeilValues& w) {
    return json{{"eta", cyc_json(w.eta)},
                {"omega", cyc_json(w.omega)},
                {"omega_minus", cyc_json(w.omega_minus)},
                {"omega_plus", cyc_json(w.omega_plus)},
                {"eta_primed", cyc_json(w.eta_primed)},
                {"omega_primed", cyc_json(w.omega_primed)},
                {"omega_minus_primed", cyc_json(w.omega_minus_primed)},
                {"omega_plus_primed", cyc_json(w.omega_plus_primed)}};
}

int cmd_table(CommonOpts& opts, const std::string& format) {
    const FieldPtr field = make_field_from(opts);
    const SympSpace space = SympSpace::standard(field, opts.n);
    const auto rows = build_table(space, opts.cap);

    if (format == "csv") {
        std::cout << "label,size,order,omega_minus,omega_plus,omega,"
                     "omega_minus_primed,omega_plus_primed\n";
        for (const auto& r : rows) {
            std::cout << '"' << r.label << "\"," << r.class_size << ','
                      << r.order << ',' << cyc_csv(r.values.omega_minus) << ','
                      << cyc_csv(r.values.omega_plus) << ','
                      << cyc_csv(r.values.omega) << ','
                      << cyc_csv(r.values.omega_minus_primed) << ','
                      << cyc_csv(r.values.omega_plus_primed) << '\n';
        }
        return 0;
    }
    json classes = json::array();
    long total = 0;
    for (const auto& r : rows) {
        total += r.class_size;
        classes.push_back(json{{"label", r.label},
                               {"representative", mat_json(r.rep.mat())},
                               {"size", r.class_size},
                               {"order", r.order},
                               {"omega_minus", cyc_json(r.values.omega_minus)},
                               {"omega_plus", cyc_json(r.values.omega_plus)},
                               {"omega", cyc_json(r.values.omega)},
                               {"omega_minus_primed",
                                cyc_json(r.values.omega_minus_primed)},
                               {"omega_plus_primed",
                                cyc_json(r.values.omega_plus_primed)}});
    }
    std::cout << json{{"q", field->q()},
                      {"n", opts.n},
                      {"group_order", total},
                      {"classes", classes}}
                     .dump(2)
              << '\n';
    return 0;
}

int cmd_matrix(CommonOpts& opts, const std::string& g_text,
               const std::string& which) {
    const FieldPtr field = make_field_from(opts);
    const SympSpace space = SympSpace::standard(field, opts.n);
    const LagrangianFrame frame = LagrangianFrame::standard(space);

    RepMatrix rm = j_matrix(frame);
    if (which != "j") {
        const GroupElement g = parse_group_element(space, g_text);
        rm = to_matrix(s_of(g), frame);
        if (which == "t")
            rm.m = rm.m.scaled(eta_closed(g));
        else if (which != "s")
            throw std::invalid_argument("unknown matrix kind");
    }

    json order = json::array();
    for (const auto& a : frame.order()) {
        json v = json::array();
        for (uint32_t x : a) v.push_back(x);
        order.push_back(std::move(v));
    }
    json entries = json::array();
    for (int i = 0; i < rm.m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < rm.m.cols; ++j) row.push_back(cyc_json(rm.m.at(i, j)));
        entries.push_back(std::move(row));
    }
    std::cout << json{{"order", order}, {"entries", entries}}.dump(2) << '\n';
    return 0;
}

int cmd_eta(CommonOpts& opts, const std::string& g_text) {
    const FieldPtr field = make_field_from(opts);
    const SympSpace space = SympSpace::standard(field, opts.n);
    const GroupElement g = parse_group_element(space, g_text);
    std::cout << weil_values_json(weil_values(g)).dump(2) << '\n';
    return 0;
}

int cmd_factor(CommonOpts& opts, const std::string& g_text) {
    const FieldPtr field = make_field_from(opts);
    const SympSpace space = SympSpace::standard(field, opts.n);
    const GroupElement g = parse_group_element(space, g_text);
    const auto seq = factor(g);

    json out = json::array();
    for (const auto& s : seq) {
        json c = json::array();
        for (uint32_t x : s.c) c.push_back(x);
        out.push_back(json{{"c", c}, {"gamma", s.gamma}});
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_verify(CommonOpts& opts, const std::string& suite, uint64_t seed,
               int samples) {
    const FieldPtr field = make_field_from(opts);
    const VerifyReport report = run_suite(suite, field, opts.n, seed, samples);
    json items = json::array();
    for (const auto& it : report.items) {
        items.push_back(json{{"name", it.name},
                             {"pass", it.pass},
                             {"skipped", it.skipped}});
        std::cerr << (it.skipped ? "SKIP " : it.pass ? "PASS " : "FAIL ")
                  << it.name << '\n';
    }
    std::cout << json{{"suite", suite}, {"all_pass", report.all_pass()},
                      {"checks", items}}
                     .dump(2)
              << '\n';
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil representation toolkit for Sp(2n,q), q odd"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string format = "json", g_text, which = "t", suite = "all";
    uint64_t seed = 1;
    int samples = 25;

    auto* table = app.add_subcommand("table", "Character table by conjugacy class");
    add_common(table, opts);
    table->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* matrix = app.add_subcommand("matrix", "Explicit representation matrix");
    add_common(matrix, opts);
    matrix->add_option("--g", g_text, "Group element as a 2n x 2n JSON int array");
    matrix->add_option("--which", which, "Which matrix: s, t, or j")
        ->check(CLI::IsMember({"s", "t", "j"}));

    auto* eta = app.add_subcommand("eta", "Normalizer eta and character values");
    add_common(eta, opts);
    eta->add_option("--g", g_text, "Group element as a 2n x 2n JSON int array")
        ->required();

    auto* factor_cmd = app.add_subcommand("factor", "Minimal transvection factorization");
    add_common(factor_cmd, opts);
    factor_cmd->add_option("--g", g_text, "Group element as a 2n x 2n JSON int array")
        ->required();

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    add_common(verify, opts);
    verify->add_option("--suite", suite,
                       "gauss|cocycle|eta|characters|factorize|frames|"
                       "constructions|all");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--samples", samples, "Sample count per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(table)) return cmd_table(opts, format);
        if (app.got_subcommand(matrix)) {
            if (which != "j" && g_text.empty())
                throw std::invalid_argument("--g is required for s and t");
            return cmd_matrix(opts, g_text, which);
        }
        if (app.got_subcommand(eta)) return cmd_eta(opts, g_text);
        if (app.got_subcommand(factor_cmd)) return cmd_factor(opts, g_text);
        if (app.got_subcommand(verify)) return cmd_verify(opts, suite, seed, samples);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
