#ifndef ALPHATHETA_CLI_HPP
#define ALPHATHETA_CLI_HPP

// Command-line front end. Everything is driven through run(RunConfig) so the
// tests exercise the same code paths as the binary in tools/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphatheta/errors.hpp"
#include "alphatheta/graph.hpp"
#include "alphatheta/parameters.hpp"
#include "alphatheta/verify.hpp"

namespace alphatheta::cli {

using Json = nlohmann::ordered_json;

enum class Command { alpha0, theta, alpha_tilde, bounds, maxcut, copositive, verify, batch };
enum class OutputFormat { table, json };

inline Command command_from_string(const std::string& s) {
    if (s == "alpha0") return Command::alpha0;
    if (s == "theta") return Command::theta;
    if (s == "alpha-tilde") return Command::alpha_tilde;
    if (s == "bounds") return Command::bounds;
    if (s == "maxcut") return Command::maxcut;
    if (s == "copositive") return Command::copositive;
    if (s == "verify") return Command::verify;
    if (s == "batch") return Command::batch;
    throw InputError("unknown command '" + s + "'");
}

inline std::string to_string(Command c) {
    switch (c) {
    case Command::alpha0: return "alpha0";
    case Command::theta: return "theta";
    case Command::alpha_tilde: return "alpha-tilde";
    case Command::bounds: return "bounds";
    case Command::maxcut: return "maxcut";
    case Command::copositive: return "copositive";
    case Command::verify: return "verify";
    case Command::batch: return "batch";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::alpha0;
    // Exactly one of these is set (directory only for batch).
    std::optional<std::string> family;
    std::vector<int> family_params;
    std::optional<std::string> graph6;
    std::optional<std::string> edges_path;
    std::optional<std::string> directory;

    double alpha0_tol = 1e-9;
    double alpha_tilde_tol = 1e-6;
    OutputFormat format = OutputFormat::table;
    std::uint64_t seed = kDefaultSeed;
    SolverOptions solver;
    int simplex_samples = kDefaultSimplexSamples;

    void validate() const {
        const int sources = int(family.has_value()) + int(graph6.has_value()) + int(edges_path.has_value()) +
                            int(directory.has_value());
        if (sources != 1) throw InputError("exactly one input source is required");
        if (command == Command::batch && !directory) throw InputError("batch needs a directory argument");
        if (command != Command::batch && directory) throw InputError("a directory is only accepted by batch");
        if (!(alpha0_tol > 0.0) || !(alpha_tilde_tol > 0.0)) throw InputError("tolerances must be positive");
        if (simplex_samples < 1) throw InputError("sample count must be positive");
    }
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// x rounded to 12 significant digits. The JSON writer emits the shortest
/// representation of this double, so re-parsing gives it back exactly.
inline double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt12(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(x));
    return buf;
}

inline Json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

inline Json num(const std::optional<double>& x) { return x ? num(*x) : Json(nullptr); }

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A .g6 file holds one graph6 line; anything else is read as an edge list.
inline Graph load_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    if (std::filesystem::path(path).extension() == ".g6") {
        std::string s = text;
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
        return parse_graph6(s);
    }
    return parse_edge_list(text);
}

inline Graph load_graph(const RunConfig& cfg) {
    if (cfg.family) return named_graph(family_from_string(*cfg.family), cfg.family_params);
    if (cfg.graph6) return parse_graph6(*cfg.graph6);
    if (cfg.edges_path) return load_graph_file(*cfg.edges_path);
    throw InputError("no graph input given");
}

inline Json config_json(const RunConfig& cfg) {
    Json c;
    c["command"] = to_string(cfg.command);
    c["alpha0_tol"] = cfg.alpha0_tol;
    c["alpha_tilde_tol"] = cfg.alpha_tilde_tol;
    c["feasibility_tol"] = cfg.solver.feasibility_tol;
    c["gap_tol"] = cfg.solver.gap_tol;
    c["max_iters"] = cfg.solver.max_iterations;
    c["seed"] = cfg.seed;
    c["simplex_samples"] = cfg.simplex_samples;
    c["copositivity_trials"] = kDefaultCopositivityTrials;
    return c;
}

inline Json graph_json(const Graph& g) {
    return Json{{"n", g.order()}, {"m", g.size()}, {"graph6", encode_graph6(g)}};
}

inline const char* kCiteAlpha0 = "alpha0 = min { a : a D + (1 - a) A psd }";
inline const char* kCiteThetaBar = "theta(Gbar), Lovasz theta of the complement";
inline const char* kCiteAlphaTilde = "alpha_tilde = min { a : a Y + (1 - a) Z - tI psd, t > 0 }";
inline const char* kCiteDegreeLower = "-lmin/(Delta - lmin) <= alpha0";
inline const char* kCiteDegreeUpper = "alpha0 <= -lmin/(delta - lmin)";
inline const char* kCiteThetaLower = "1/theta(Gbar) <= alpha0";
inline const char* kCiteMaxcutLower = "1 - |E|/(2 maxcut) <= alpha0";
inline const char* kCiteGwLower = "1 - |E|/(2 M*) <= alpha0, M* the max-cut SDP value";
inline const char* kCiteMaxcutUpper = "maxcut <= (|E|/2)(delta - lmin)/delta";
inline const char* kCiteCopLower = "1/omega <= alpha0^C";
inline const char* kCiteCopUpper = "alpha0^C <= 1/2";
inline const char* kCiteDnn = "doubly nonnegative restriction of the copositive program";

inline Json bounds_json(const BoundsReport& b) {
    return Json{{"degree_lower", num(b.lower_degree)},   {"degree_upper", num(b.upper_degree)},
                {"degree_upper_vacuous", b.upper_degree_vacuous},
                {"theta_lower", num(b.lower_theta)},     {"maxcut_lower", num(b.lower_maxcut)},
                {"gw_lower", num(b.lower_gw)},           {"maxcut_upper", num(b.maxcut_upper)}};
}

inline Json bounds_citations() {
    return Json{{"degree_lower", kCiteDegreeLower}, {"degree_upper", kCiteDegreeUpper},
                {"theta_lower", kCiteThetaLower},   {"maxcut_lower", kCiteMaxcutLower},
                {"gw_lower", kCiteGwLower},         {"maxcut_upper", kCiteMaxcutUpper}};
}

inline Json copositive_json(const BoundsReport& b) {
    return Json{{"lower", num(b.copositive_lower)}, {"upper", num(b.copositive_upper)}, {"dnn", num(b.dnn_value)}};
}

inline Json copositive_citations() {
    return Json{{"lower", kCiteCopLower}, {"upper", kCiteCopUpper}, {"dnn", kCiteDnn}};
}

inline Json row_json(const ReportRow& r) {
    return Json{{"id", r.id},          {"statement", r.statement},   {"relation", to_string(r.relation)},
                {"lhs", num(r.lhs)},   {"rhs", num(r.rhs)},          {"slack", num(r.slack)},
                {"tol", r.tol},        {"status", to_string(r.status)}, {"note", r.note}};
}

inline Json report_json(const TheoremReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) rows.push_back(row_json(r));
    return Json{{"graph", rep.graph_id},
                {"passed", rep.passed()},
                {"pass", rep.count(RowStatus::pass)},
                {"fail", rep.count(RowStatus::fail)},
                {"skipped", rep.count(RowStatus::skipped)},
                {"rows", rows}};
}

inline Json verify_json(const TheoremReport& rep) {
    Json j;
    const auto& v = rep.values;
    j["alpha0"] = num(v.alpha0);
    j["alpha0_dual"] = num(v.alpha0_dual);
    j["theta_complement"] = num(v.theta_complement);
    j["alpha_tilde"] = num(v.alpha_tilde);
    j["inv_theta"] = num(v.inv_theta);
    j["maxcut"] = v.maxcut ? Json(*v.maxcut) : Json(nullptr);
    j["gw"] = num(v.gw);
    j["omega"] = v.omega ? Json(*v.omega) : Json(nullptr);
    if (v.bounds) {
        j["bounds"] = bounds_json(*v.bounds);
        j["copositive"] = copositive_json(*v.bounds);
    }
    j["report"] = report_json(rep);
    Json cite{{"alpha0", kCiteAlpha0}, {"theta_complement", kCiteThetaBar}, {"alpha_tilde", kCiteAlphaTilde},
              {"bounds", bounds_citations()}, {"copositive", copositive_citations()}};
    j["citations"] = cite;
    return j;
}

// ---- table rendering: flattens the JSON value tree ----

inline std::string scalar_text(const Json& v) {
    if (v.is_null()) return "n/a";
    if (v.is_number_float()) return fmt12(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it.key() == "citations" || it.key() == "report" || it.key() == "config") continue;
        if (it->is_object()) {
            flatten(*it, key, os);
        } else if (it->is_array()) {
            os << std::left << std::setw(28) << key << ' ' << it->dump() << '\n';
        } else {
            os << std::left << std::setw(28) << key << ' ' << scalar_text(*it) << '\n';
        }
    }
}

inline void report_table(const Json& rep, std::ostream& os) {
    os << "report " << rep["graph"].get<std::string>() << ": " << rep["pass"].get<std::size_t>() << " pass, "
       << rep["fail"].get<std::size_t>() << " fail, " << rep["skipped"].get<std::size_t>() << " skipped\n";
    for (const auto& r : rep["rows"]) {
        os << "  " << std::left << std::setw(8) << r["status"].get<std::string>() << std::setw(48)
           << r["id"].get<std::string>() << " lhs=" << scalar_text(r["lhs"]) << " " << r["relation"].get<std::string>()
           << " rhs=" << scalar_text(r["rhs"]) << "  slack=" << scalar_text(r["slack"]);
        if (!r["note"].get<std::string>().empty()) os << "  (" << r["note"].get<std::string>() << ")";
        os << '\n';
    }
}

inline std::string render(const Json& doc, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        os << doc.dump(2) << '\n';
        return os.str();
    }
    for (auto it = doc["config"].begin(); it != doc["config"].end(); ++it) {
        os << "# " << it.key() << " = " << scalar_text(*it) << '\n';
    }
    flatten(doc, "", os);
    if (doc.contains("report")) report_table(doc["report"], os);
    if (doc.contains("graphs")) {
        for (const auto& g : doc["graphs"]) {
            os << std::left << std::setw(24) << g["file"].get<std::string>() << ' ' << g["status"].get<std::string>();
            if (g.contains("message")) os << "  " << g["message"].get<std::string>();
            os << '\n';
        }
    }
    return os.str();
}

inline ReportOptions report_options(const RunConfig& cfg) {
    ReportOptions o;
    o.alpha0_tol = cfg.alpha0_tol;
    o.alpha_tilde_tol = cfg.alpha_tilde_tol;
    o.seed = cfg.seed;
    o.simplex_samples = cfg.simplex_samples;
    o.solver = cfg.solver;
    return o;
}

inline int run_batch(const RunConfig& cfg, Json& doc, std::string& err) {
    namespace fs = std::filesystem;
    const fs::path dir(*cfg.directory);
    if (!fs::is_directory(dir)) throw InputError("'" + dir.string() + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().filename().string().front() != '.') files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no graphs found in '" + dir.string() + "'");

    Json graphs = Json::array();
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t rejected = 0;
    std::size_t errors = 0;
    const auto opts = report_options(cfg);
    for (const auto& f : files) {
        Json entry{{"file", f.filename().string()}};
        try {
            const Graph g = load_graph_file(f.string());
            const auto rep = theorem_report(g, opts, f.filename().string());
            entry["status"] = rep.passed() ? "pass" : "fail";
            entry["result"] = verify_json(rep);
            (rep.passed() ? passed : failed) += 1;
        } catch (const EdgelessGraphError& e) {
            entry["status"] = "rejected";
            entry["message"] = e.what();
            ++rejected;
        } catch (const std::exception& e) {
            entry["status"] = "error";
            entry["message"] = e.what();
            err += f.filename().string() + ": " + e.what() + "\n";
            ++errors;
        }
        graphs.push_back(std::move(entry));
    }
    doc["graphs"] = graphs;
    doc["summary"] = Json{{"total", files.size()}, {"passed", passed}, {"failed", failed},
                          {"rejected", rejected}, {"errors", errors}};
    if (failed > 0) return 2;
    if (rejected + errors > 0) return 1;
    return 0;
}

} // namespace detail

/// Runs one command. Never throws: errors become exit code 1 with a message
/// on err, theorem failures exit code 2.
inline RunResult run(const RunConfig& cfg) {
    RunResult res;
    Json doc;
    try {
        cfg.validate();
        doc["config"] = detail::config_json(cfg);
        if (cfg.command == Command::batch) {
            res.exit_code = detail::run_batch(cfg, doc, res.err);
            res.out = detail::render(doc, cfg.format);
            return res;
        }
        const Graph g = detail::load_graph(cfg);
        doc["graph"] = detail::graph_json(g);
        switch (cfg.command) {
        case Command::alpha0: {
            const auto r = alpha0(g, cfg.alpha0_tol);
            doc["alpha0"] = num(r.value);
            doc["method"] = to_string(r.method);
            doc["iterations"] = r.iterations;
            doc["lambda_min_at_alpha0"] = num(r.lambda_min_at_value);
            doc["citations"] = Json{{"alpha0", detail::kCiteAlpha0}};
            break;
        }
        case Command::theta: {
            const auto t = lovasz_theta_detailed(g, cfg.solver);
            const auto tb = lovasz_theta_detailed(complement(g), cfg.solver);
            doc["theta"] = num(t.value);
            doc["theta_min_form"] = num(t.min_value);
            doc["theta_complement"] = num(tb.value);
            doc["citations"] = Json{{"theta", citation(ProgramKind::theta_max)},
                                    {"theta_min_form", citation(ProgramKind::theta_min)},
                                    {"theta_complement", detail::kCiteThetaBar}};
            break;
        }
        case Command::alpha_tilde: {
            const auto a = alpha_tilde_detailed(g, cfg.alpha_tilde_tol, cfg.solver);
            doc["alpha_tilde"] = num(a.value);
            doc["iterations"] = a.iterations;
            doc["inv_theta"] = num(inv_theta_value(g, cfg.solver));
            doc["theta_complement"] = num(lovasz_theta(complement(g), cfg.solver));
            doc["citations"] = Json{{"alpha_tilde", detail::kCiteAlphaTilde},
                                    {"inv_theta", citation(ProgramKind::inv_theta)},
                                    {"theta_complement", detail::kCiteThetaBar}};
            break;
        }
        case Command::bounds: {
            doc["alpha0"] = num(alpha0(g, cfg.alpha0_tol).value);
            const auto b = bounds_report(g, cfg.solver);
            doc["bounds"] = detail::bounds_json(b);
            doc["copositive"] = detail::copositive_json(b);
            doc["citations"] = Json{{"alpha0", detail::kCiteAlpha0},
                                    {"bounds", detail::bounds_citations()},
                                    {"copositive", detail::copositive_citations()}};
            break;
        }
        case Command::maxcut: {
            const auto mc = maxcut_exact(g);
            const auto gw = gw_detailed(g, cfg.solver);
            const auto cb = cut_bounds(g, mc.value, gw.value);
            doc["maxcut"] = mc.value;
            doc["side"] = mc.side;
            doc["gw"] = num(gw.value);
            doc["maxcut_upper"] = num(cb.maxcut_upper);
            doc["citations"] = Json{{"maxcut", "max over S of |E(S, V - S)| (exhaustive)"},
                                    {"gw", citation(ProgramKind::gw)},
                                    {"maxcut_upper", detail::kCiteMaxcutUpper}};
            break;
        }
        case Command::copositive: {
            const auto c = copositive_bounds(g, cfg.solver);
            const auto ms = motzkin_straus_value(g, cfg.simplex_samples, cfg.seed);
            doc["omega"] = clique_number(g);
            doc["copositive"] = Json{{"lower", num(c.lower)}, {"upper", num(c.upper)}, {"dnn", num(c.dnn)}};
            doc["motzkin_straus"] = Json{{"certified", num(ms.certified)},
                                         {"empirical_min", num(ms.empirical_min)},
                                         {"samples", ms.samples}};
            doc["citations"] = Json{{"copositive", detail::copositive_citations()},
                                    {"motzkin_straus", "min { x'(Abar + I)x : x in simplex } = 1/omega"}};
            break;
        }
        case Command::verify: {
            const auto rep = theorem_report(g, detail::report_options(cfg));
            const Json body = detail::verify_json(rep);
            for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = *it;
            if (!rep.passed()) res.exit_code = 2;
            break;
        }
        case Command::batch: break;
        }
        res.out = detail::render(doc, cfg.format);
    } catch (const EdgelessGraphError& e) {
        res.exit_code = 1;
        res.err = std::string(e.what()) + "\n";
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

/// Builds a RunConfig from argv. Returns nullopt after printing help; throws
/// InputError on bad arguments.
inline std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out) {
    CLI::App app{"alphatheta: PSD threshold alpha0, Lovasz theta and related graph bounds"};
    std::string command;
    std::string directory;
    std::vector<std::string> family;
    std::string graph6;
    std::string edges;
    double tol = 1e-9;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    app.add_option("command", command,
                   "alpha0 | theta | alpha-tilde | bounds | maxcut | copositive | verify | batch")
        ->required();
    app.add_option("directory", directory, "corpus directory (batch only)");
    app.add_option("--family", family, "named family and its parameters, e.g. --family cycle 5")->expected(1, -1);
    app.add_option("--graph6", graph6, "graph6 string");
    app.add_option("--edges", edges, "edge-list file ('n m' header, then m lines 'u v')");
    app.add_option("--tol", tol, "bisection tolerance for alpha0");
    app.add_flag("--json", json, "emit JSON instead of a table");
    app.add_option("--seed", seed, "seed for sampled checks");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InputError(e.what());
    }

    RunConfig cfg;
    cfg.command = command_from_string(command);
    cfg.solver = SolverOptions::from_env();
    if (!family.empty()) {
        cfg.family = family.front();
        for (std::size_t i = 1; i < family.size(); ++i) {
            try {
                std::size_t used = 0;
                cfg.family_params.push_back(std::stoi(family[i], &used));
                if (used != family[i].size()) throw std::invalid_argument(family[i]);
            } catch (const std::exception&) {
                throw InputError("family parameter '" + family[i] + "' is not an integer");
            }
        }
    }
    if (app.count("--graph6") > 0) cfg.graph6 = graph6;
    if (app.count("--edges") > 0) cfg.edges_path = edges;
    if (!directory.empty()) cfg.directory = directory;
    cfg.alpha0_tol = tol;
    cfg.seed = seed;
    cfg.format = json ? OutputFormat::json : OutputFormat::table;
    return cfg;
}

} // namespace alphatheta::cli

#endif // ALPHATHETA_CLI_HPP
