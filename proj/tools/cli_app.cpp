#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <vector>

#include "fig8/asymptotics.hpp"
#include "fig8/errors.hpp"
#include "fig8/parallel.hpp"
#include "fig8/quantum_dilog.hpp"
#include "fig8/region_atlas.hpp"
#include "fig8/selfcheck.hpp"
#include "fig8/topology.hpp"

namespace fig8::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kSchemaVersion = "1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const LogComplex& z) {
    json j{{"log_mag", z.log_mag}, {"arg", z.arg}};
    if (z.is_zero()) j["log_mag"] = "-inf";
    return j;
}

json representable(const LogComplex& z) {
    if (z.is_zero()) return to_json(cplx{0.0, 0.0});
    if (z.log_mag > 700.0) return nullptr;
    return to_json(z.to_complex());
}

cplx require_xi(const std::string& text) {
    const auto xi = parse_complex(text);
    if (!xi) throw UsageError("cannot parse complex literal '" + text + "'");
    return *xi;
}

template <class T>
std::vector<T> split_list(const std::string& text, std::size_t expect, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        T v{};
        try {
            if constexpr (std::is_same_v<T, int>)
                v = std::stoi(item, &used);
            else
                v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty() || (expect && out.size() != expect))
        throw UsageError(std::string(what) + " needs " + (expect ? std::to_string(expect) : "at least one") +
                         " comma-separated values");
    return out;
}

void emit(std::ostream& out, const json& command, const json& results, const json& provenance) {
    json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"results", results}};
    if (!provenance.is_null()) doc["provenance"] = provenance;
    out << doc.dump(2) << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    return f;
}

// Settings shared by the subcommands after config/flag merging.
struct Settings {
    QuadratureSpec quad;
    double zero_tol = 1e-9;
};

std::string hv_label(const HvSigns& s) {
    auto c = [](int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); };
    return std::string("H") + c(s.h_sign) + "V" + c(s.v_sign);
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text == "kappa" || text == "κ") return cplx{kappa(), 0.0};
    static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex full("^([+-]?" + num + ")(?:([+-])(" + num + ")?i)?$");
    static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
    std::smatch m;
    if (std::regex_match(text, m, full)) {
        const double re = std::stod(m[1].str());
        double im = 0.0;
        if (m[2].matched) {
            im = m[3].matched ? std::stod(m[3].str()) : 1.0;
            if (m[2].str() == "-") im = -im;
        }
        return cplx{re, im};
    }
    if (std::regex_match(text, m, imag_only)) {
        double im = m[2].matched ? std::stod(m[2].str()) : 1.0;
        if (m[1].str() == "-") im = -im;
        return cplx{0.0, im};
    }
    return std::nullopt;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot read config '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string{};
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
        kv[trim(line.substr(0, eq))] = val;
    }
    return kv;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored Jones asymptotics of the figure-eight knot", "fig8"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value file with tol and zero_tol");

    std::string xi_text, via = "direct", route = "direct", n_list = "50,100,200", out_path, quantity = "ReF",
                window = "-0.1,1.1,-0.6,0.4", res = "100,100";
    int n = 0, case_id = 0, p = 1;
    double u = 0.0, tol = 0.0, zero_tol = 0.0;
    std::string u_complex_text = "0";
    bool quick = false;

    std::vector<CLI::Option*> tol_opts, zero_tol_opts;
    auto add_tols = [&](CLI::App* sub, bool tol_is_zero_tol) {
        if (tol_is_zero_tol) {
            zero_tol_opts.push_back(sub->add_option("--tol", zero_tol, "zero tolerance for region boundaries"));
        } else {
            tol_opts.push_back(sub->add_option("--tol", tol, "absolute quadrature tolerance"));
            zero_tol_opts.push_back(sub->add_option("--zero-tol", zero_tol, "zero tolerance for region boundaries"));
        }
    };

    auto* classify_cmd = app.add_subcommand("classify", "Region label and diagnostics of xi");
    classify_cmd->add_option("--xi", xi_text, "complex parameter, e.g. 1+0.5i")->required();
    add_tols(classify_cmd, true);

    auto* jones_cmd = app.add_subcommand("jones", "Evaluate J_N(exp(xi/N))");
    jones_cmd->add_option("--xi", xi_text, "complex parameter")->required();
    jones_cmd->add_option("--n", n, "color N >= 1")->required();
    jones_cmd->add_option("--via", via, "direct | potential")->check(CLI::IsMember({"direct", "potential"}));
    add_tols(jones_cmd, false);

    auto* study_cmd = app.add_subcommand("study", "Convergence study of J_N against its prediction");
    study_cmd->add_option("--xi", xi_text, "complex parameter")->required();
    study_cmd->add_option("--n-list", n_list, "comma-separated N values");
    study_cmd->add_option("--route", route, "direct | potential")->check(CLI::IsMember({"direct", "potential"}));
    study_cmd->add_option("--out", out_path, "CSV output file");
    add_tols(study_cmd, false);

    auto* predict_cmd = app.add_subcommand("predict", "Leading-order asymptotic prediction");
    predict_cmd->add_option("--xi", xi_text, "complex parameter (cases 4, 6 and the default route)");
    predict_cmd->add_option("--n", n, "color N >= 1")->required();
    predict_cmd->add_option("--case", case_id, "previously known case 1..8 instead of the regime formula")
        ->check(CLI::Range(1, 8));
    predict_cmd->add_option("--p", p, "integer p for cases 1-3");
    predict_cmd->add_option("--u", u, "real shift for cases 1, 3");
    predict_cmd->add_option("--u-complex", u_complex_text, "complex u for case 8");
    add_tols(predict_cmd, false);

    auto* cs_cmd = app.add_subcommand("cs", "Chern-Simons invariant and cusp data");
    cs_cmd->add_option("--xi", xi_text, "complex parameter or kappa")->required();

    auto* grid_cmd = app.add_subcommand("grid", "Export a quantity on a rectangular grid as CSV");
    grid_cmd->add_option("--xi", xi_text, "complex parameter (ReF, HVMask)");
    grid_cmd->add_option("--quantity", quantity, "ReF | RegionMask | HVMask")
        ->check(CLI::IsMember({"ReF", "RegionMask", "HVMask"}));
    grid_cmd->add_option("--window", window, "x0,x1,y0,y1");
    grid_cmd->add_option("--res", res, "W,H");
    grid_cmd->add_option("--out", out_path, "CSV output file (stdout when omitted)");
    add_tols(grid_cmd, false);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
    selftest_cmd->add_flag("--quick", quick, "skip the slowest checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Settings st;
        if (!config_path.empty()) {
            for (const auto& [k, v] : read_config(config_path)) {
                std::size_t used = 0;
                double d = 0;
                try {
                    d = std::stod(v, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != v.size()) throw UsageError("config: bad value for '" + k + "'");
                if (k == "tol")
                    st.quad.tol = d;
                else if (k == "zero_tol")
                    st.zero_tol = d;
                else
                    throw UsageError("config: unknown key '" + k + "'");
            }
        }
        for (auto* o : tol_opts)
            if (o->count()) st.quad.tol = tol;
        for (auto* o : zero_tol_opts)
            if (o->count()) st.zero_tol = zero_tol;
        if (!(st.quad.tol > 0) || !(st.zero_tol >= 0)) throw UsageError("tolerances must be positive");

        if (classify_cmd->parsed()) {
            const cplx xi = require_xi(xi_text);
            const Classification c = classify(xi, st.zero_tol);
            const auto& d = c.diagnostics;
            if (std::isnan(d.cosh_a_minus_cos_b) || std::isnan(d.tech_condition) || std::isnan(d.re_s_over_xi))
                throw NumericalFailure("classify: NaN diagnostics");
            emit(out, {{"name", "classify"}, {"xi", xi_text}, {"zero_tol", st.zero_tol}},
                 {{"label", to_string(c.label)},
                  {"in_xi", d.in_xi},
                  {"cosh_a_minus_cos_b", d.cosh_a_minus_cos_b},
                  {"tech_condition", d.tech_condition},
                  {"re_s_over_xi", d.re_s_over_xi}},
                 {{"regime", to_string(c.label)}, {"conjectural", is_conjectural(c.label)}});
            return 0;
        }

        if (jones_cmd->parsed()) {
            const cplx xi = require_xi(xi_text);
            if (n < 1) throw UsageError("--n must be >= 1");
            json res;
            if (via == "direct") {
                const JonesEvaluation ev = colored_jones_detail(n, xi);
                res = {{"value", to_json(ev.value)},
                       {"value_if_representable", representable(ev.value)},
                       {"precision_bits", ev.precision_bits},
                       {"cancellation_nats", ev.cancellation_nats}};
            } else {
                const LogComplex v = jones_via_potential(n, make_cusp(xi), st.quad);
                res = {{"value", to_json(v)}, {"value_if_representable", representable(v)}};
            }
            emit(out, {{"name", "jones"}, {"xi", xi_text}, {"n", n}, {"via", via}}, res, nullptr);
            return 0;
        }

        if (study_cmd->parsed()) {
            const cplx xi = require_xi(xi_text);
            const auto ns = split_list<int>(n_list, 0, "--n-list");
            if (ns.size() < 3) throw UsageError("--n-list needs at least three values");
            for (int v : ns)
                if (v < 1) throw UsageError("--n-list entries must be >= 1");
            const ConvergenceReport rep =
                convergence_study(make_cusp(xi), ns, route == "direct" ? StudyRoute::Direct : StudyRoute::Potential,
                                  st.zero_tol, st.quad);
            json rows = json::array();
            for (std::size_t i = 0; i < ns.size(); ++i)
                rows.push_back({{"n", ns[i]},
                                {"exact", to_json(rep.exact[i])},
                                {"predicted", to_json(rep.predicted[i])},
                                {"err", rep.errors[i]}});
            if (!out_path.empty()) {
                auto f = open_out(out_path);
                f << "N,exact_logmag,exact_arg,pred_logmag,pred_arg,err\n";
                for (std::size_t i = 0; i < ns.size(); ++i)
                    f << ns[i] << ',' << g17(rep.exact[i].log_mag) << ',' << g17(rep.exact[i].arg) << ','
                      << g17(rep.predicted[i].log_mag) << ',' << g17(rep.predicted[i].arg) << ','
                      << g17(rep.errors[i]) << "\n";
                if (!f) throw std::ios_base::failure("write failed for '" + out_path + "'");
            }
            emit(out, {{"name", "study"}, {"xi", xi_text}, {"n_list", ns}, {"route", route}},
                 {{"rows", rows},
                  {"fitted_order", rep.fitted_order},
                  {"csv", out_path.empty() ? json(nullptr) : json(out_path)}},
                 {{"regime", to_string(rep.regime)}, {"conjectural", rep.conjectural}});
            return 0;
        }

        if (predict_cmd->parsed()) {
            if (n < 1) throw UsageError("--n must be >= 1");
            if (case_id != 0) {
                KnownCaseParams prm;
                prm.p = p;
                prm.u = u;
                if (!xi_text.empty()) prm.xi = require_xi(xi_text);
                prm.u_complex = require_xi(u_complex_text);
                const LogComplex v = known_case_predict(case_id, prm, n);
                emit(out, {{"name", "predict"}, {"case", case_id}, {"n", n}, {"xi", xi_text}, {"p", p}, {"u", u},
                           {"u_complex", u_complex_text}},
                     {{"leading", to_json(v)}, {"leading_if_representable", representable(v)}},
                     {{"regime", "known_case_" + std::to_string(case_id)}, {"conjectural", false}});
                return 0;
            }
            if (xi_text.empty()) throw UsageError("--xi is required without --case");
            const cplx xi = require_xi(xi_text);
            const AsymptoticPrediction pr = predict(make_cusp(xi), n, st.zero_tol);
            emit(out, {{"name", "predict"}, {"xi", xi_text}, {"n", n}},
                 {{"leading", to_json(pr.leading)},
                  {"leading_if_representable", representable(pr.leading)},
                  {"growth_rate", to_json(pr.growth_rate)},
                  {"torsion_factor", to_json(pr.torsion_factor)},
                  {"prefactor", to_json(pr.prefactor)},
                  {"alexander_limit", to_json(pr.alexander_limit)}},
                 {{"regime", to_string(pr.regime)}, {"conjectural", pr.conjectural}});
            return 0;
        }

        if (cs_cmd->parsed()) {
            const cplx xi = require_xi(xi_text);
            const CuspParameter cp = make_cusp(xi);
            const cplx cs = cs_invariant(cp);
            emit(out, {{"name", "cs"}, {"xi", xi_text}},
                 {{"cs", to_json(cs)},
                  {"cs_unreduced", to_json(cs_unreduced(cp))},
                  {"s", to_json(action_s(cp))},
                  {"v", to_json(v_of(xi))},
                  {"longitude_eigenvalue", to_json(longitude_eigenvalue(xi))}},
                 nullptr);
            return 0;
        }

        if (grid_cmd->parsed()) {
            const auto w = split_list<double>(window, 4, "--window");
            const auto r = split_list<int>(res, 2, "--res");
            if (!(w[0] < w[1] && w[2] < w[3])) throw UsageError("--window needs x0<x1 and y0<y1");
            if (r[0] < 2 || r[1] < 2) throw UsageError("--res needs W,H >= 2");
            const int W = r[0], H = r[1];
            std::optional<CuspParameter> cp;
            if (quantity != "RegionMask") {
                if (xi_text.empty()) throw UsageError("--xi is required for " + quantity);
                cp = make_cusp(require_xi(xi_text));
            }
            auto coord = [](double lo, double hi, int i, int count) {
                if (i == 0) return lo;
                if (i == count - 1) return hi;
                return lo + (hi - lo) * double(i) / double(count - 1);
            };
            std::vector<std::string> cells(std::size_t(W) * H);
            parallel_for(std::size_t(H), [&](std::size_t iy) {
                const double y = coord(w[2], w[3], int(iy), H);
                for (int ix = 0; ix < W; ++ix) {
                    const double x = coord(w[0], w[1], ix, W);
                    const cplx z{x, y};
                    std::string& cell = cells[iy * W + ix];
                    if (quantity == "ReF") {
                        double v = std::nan("");
                        try {
                            v = big_f(z, *cp).real();
                        } catch (const DomainError&) {
                        }
                        cell = g17(v);
                    } else if (quantity == "RegionMask") {
                        cell = to_string(classify(z, st.zero_tol).label);
                    } else {
                        try {
                            cell = hv_label(hv_membership(z, *cp));
                        } catch (const DomainError&) {
                            cell = "NA";
                        }
                    }
                }
            });
            std::ofstream file;
            if (!out_path.empty()) file = open_out(out_path);
            std::ostream& csv = out_path.empty() ? out : file;
            csv << (quantity == "ReF" ? "x,y,value\n" : "x,y,label\n");
            for (int iy = 0; iy < H; ++iy)
                for (int ix = 0; ix < W; ++ix)
                    csv << g17(coord(w[0], w[1], ix, W)) << ',' << g17(coord(w[2], w[3], iy, H)) << ','
                        << cells[std::size_t(iy) * W + ix] << "\n";
            if (!csv) throw std::ios_base::failure("write failed");
            if (!out_path.empty())
                emit(out, {{"name", "grid"}, {"xi", xi_text}, {"quantity", quantity}, {"window", w}, {"res", r}},
                     {{"rows", W * H}, {"csv", out_path}}, nullptr);
            return 0;
        }

        if (selftest_cmd->parsed()) {
            bool all = true;
            for (const auto& c : run_selftest(quick)) {
                out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << c.detail << "\n";
                all = all && c.pass;
            }
            return all ? 0 : 3;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

}  // namespace fig8::cli
