#include "hamdiff/cli.hpp"

#include "hamdiff/bounds.hpp"
#include "hamdiff/certificate.hpp"
#include "hamdiff/constructions.hpp"
#include "hamdiff/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace hamdiff::cli {

using nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string command;
    int n = 0;
    std::optional<int> c;
    std::string dspec = "all";
    std::string predicate = "cycle";
    std::string name;
    int budget_seconds = 300;
    std::string format = "text";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::string certificate_path;
};

std::string scalar_text(const ordered_json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_scalar_array(const ordered_json& v)
{
    if (!v.is_array())
        return false;
    for (const auto& e : v)
        if (e.is_structured())
            return false;
    return true;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

/// One "key,value" row per leaf; nested keys are dotted, scalar arrays are
/// joined with ';'.
void flatten_csv(const ordered_json& v, const std::string& key, std::ostream& os)
{
    if (v.is_object()) {
        for (const auto& [k, child] : v.items())
            flatten_csv(child, key.empty() ? k : key + "." + k, os);
    } else if (is_scalar_array(v)) {
        std::string joined;
        for (std::size_t i = 0; i < v.size(); ++i)
            joined += (i ? ";" : "") + scalar_text(v[i]);
        os << csv_field(key) << ',' << csv_field(joined) << '\n';
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten_csv(v[i], key + "." + std::to_string(i), os);
    } else {
        os << csv_field(key) << ',' << csv_field(scalar_text(v)) << '\n';
    }
}

void write_text(const ordered_json& report, std::ostream& os, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : report.items()) {
        if (is_scalar_array(v)) {
            os << pad << k << ":";
            if (v.size() > 0 && v[0].is_string()) {
                os << '\n';
                for (const auto& e : v)
                    os << pad << "  " << scalar_text(e) << '\n';
            } else {
                for (const auto& e : v)
                    os << ' ' << scalar_text(e);
                os << '\n';
            }
        } else if (v.is_array()) {
            os << pad << k << ":\n";
            for (const auto& e : v) {
                write_text(e, os, indent + 2);
                os << pad << "  --\n";
            }
        } else if (v.is_object()) {
            os << pad << k << ":\n";
            write_text(v, os, indent + 2);
        } else {
            os << pad << k << ": " << scalar_text(v) << '\n';
        }
    }
}

void write_formula_table(const ordered_json& report, std::ostream& os)
{
    os << "n = " << report["n"].get<int>();
    if (!report["c"].is_null())
        os << ", c = " << report["c"].get<int>();
    os << '\n';
    os << std::left;
    os << "  " << std::setw(16) << "formula" << std::setw(24) << "lower" << "upper" << '\n';
    for (const auto& row : report["rows"]) {
        os << "  " << std::setw(16) << row["name"].get<std::string>() << std::setw(24)
           << (row["lower"].is_null() ? "-" : row["lower"].get<std::string>())
           << (row["upper"].is_null() ? "-" : row["upper"].get<std::string>()) << '\n';
    }
}

DifferencePredicate predicate_of(const RunConfig& cfg)
{
    if (cfg.predicate == "k4")
        return DifferencePredicate::contains_k4();
    return DifferencePredicate::cycle_in(parse_dspec(cfg.dspec));
}

ordered_json failure_json(const PairFailure& f)
{
    ordered_json j;
    j["pair"] = {f.i, f.j};
    j["reason"] = f.reason;
    j["cycle_lengths"] = std::vector<int>(f.cycle_lengths.begin(), f.cycle_lengths.end());
    return j;
}

ordered_json paths_json(const std::vector<HamPath>& paths)
{
    ordered_json arr = ordered_json::array();
    for (const auto& p : paths)
        arr.push_back(p.to_string());
    return arr;
}

struct Outcome {
    int code = kOk;
    ordered_json report;
    std::string extra_text;  // text-mode only lines
};

Outcome cmd_enumerate(const RunConfig& cfg)
{
    const auto paths = enumerate_paths(cfg.n);
    Outcome o;
    o.report["command"] = "enumerate";
    o.report["n"] = cfg.n;
    o.report["count"] = paths.size();
    o.report["paths"] = paths_json(paths);
    return o;
}

Outcome cmd_exact(const RunConfig& cfg)
{
    const auto predicate = predicate_of(cfg);
    const auto graph = build_compat_graph(cfg.n, predicate);
    CliqueOptions options;
    options.budget = std::chrono::seconds(cfg.budget_seconds);
    const auto result = max_clique(graph, options);

    Outcome o;
    o.code = result.optimal ? kOk : kBudgetExhausted;
    o.report["command"] = "exact";
    o.report["n"] = cfg.n;
    o.report["predicate"] = predicate.render();
    o.report["size"] = result.size;
    o.report["optimal"] = result.optimal;
    o.report["nodes_explored"] = result.nodes_explored;
    o.report["family"] = result.members;
    std::vector<HamPath> family;
    for (auto i : result.members)
        family.push_back(graph.path(i));
    o.report["paths"] = paths_json(family);
    o.extra_text = "elapsed_ms: " + std::to_string(result.elapsed.count()) + "\n";
    return o;
}

ConstructedFamily build_named(const RunConfig& cfg)
{
    const auto need_c = [&] {
        if (!cfg.c)
            throw ValidationError("construction '" + cfg.name + "' requires --c");
        return *cfg.c;
    };
    if (cfg.name == "greedy")
        return greedy_family(cfg.n, predicate_of(cfg), cfg.seed);
    if (cfg.name == "bipartite")
        return bipartite_family(cfg.n);
    if (cfg.name == "block")
        return block_family(cfg.n, need_c());
    if (cfg.name == "shifted-block")
        return shifted_block_family(cfg.n, need_c());
    if (cfg.name == "fixed-endpoint")
        return fixed_endpoint_family(cfg.n, need_c());
    if (cfg.name == "k4")
        return k4_family(cfg.n);
    if (cfg.name == "sH") {
        std::vector<Vertex> id(static_cast<std::size_t>(cfg.n));
        for (int i = 0; i < cfg.n; ++i)
            id[static_cast<std::size_t>(i)] = i + 1;
        return {sH_set(HamPath(id)), DifferencePredicate::cycle_in(DSpec::odd()),
                "sH(n=" + std::to_string(cfg.n) + ")"};
    }
    if (cfg.name == "m53")
        return m53_matching_family();
    throw ValidationError("unknown construction '" + cfg.name + "'");
}

Outcome cmd_construct(const RunConfig& cfg)
{
    const auto family = build_named(cfg);
    const auto verification = verify_family(family);

    Outcome o;
    o.report["command"] = "construct";
    o.report["construction"] = family.provenance;
    o.report["n"] = family.n();
    o.report["predicate"] = family.claim.render();
    o.report["size"] = family.size();
    o.report["verified"] = verification.ok();
    if (cfg.name == "sH") {
        bool odd_only = true;
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                for (int l : cycle_lengths(UnionGraph(family.paths[i], family.paths[j])))
                    odd_only = odd_only && l % 2 == 1;
        o.report["odd_cycles_only"] = odd_only;
    }
    o.report["paths"] = paths_json(family.paths);
    if (!verification.ok()) {
        o.code = kVerificationFailed;
        o.report["failure"] = failure_json(verification.failures.front());
        return o;
    }
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file)
            throw ValidationError("cannot write certificate to '" + cfg.out_path + "'");
        file << to_json(*verification.certificate).dump(2) << '\n';
        o.report["certificate"] = cfg.out_path;
    }
    return o;
}

Outcome cmd_formulas(const RunConfig& cfg)
{
    if (cfg.c && *cfg.c < 2)
        throw ValidationError("--c must be at least 2");
    Outcome o;
    o.report["command"] = "formulas";
    o.report["n"] = cfg.n;
    o.report["c"] = cfg.c ? ordered_json(*cfg.c) : ordered_json(nullptr);
    o.report["rows"] = ordered_json::array();
    for (const auto& t : applicable_formulas(cfg.n, cfg.c)) {
        ordered_json row;
        row["name"] = t.name;
        row["lower"] = t.lower ? ordered_json(format_rational(*t.lower)) : ordered_json(nullptr);
        row["upper"] = t.upper ? ordered_json(format_rational(*t.upper)) : ordered_json(nullptr);
        o.report["rows"].push_back(std::move(row));
    }
    return o;
}

Outcome cmd_verify(const RunConfig& cfg)
{
    std::ifstream file(cfg.certificate_path);
    if (!file)
        throw ValidationError("cannot read certificate '" + cfg.certificate_path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(file);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("certificate is not valid JSON: ") + e.what());
    }
    const auto cert = certificate_from_json(doc);
    const auto verification = recheck_certificate(cert);

    Outcome o;
    o.code = verification.ok() ? kOk : kVerificationFailed;
    o.report["command"] = "verify";
    o.report["n"] = cert.n;
    o.report["predicate"] = cert.predicate.render();
    o.report["construction"] = cert.construction;
    o.report["size"] = cert.paths.size();
    o.report["valid"] = verification.ok();
    if (!verification.ok())
        o.report["failure"] = failure_json(verification.failures.front());
    return o;
}

void emit(const RunConfig& cfg, const Outcome& o, std::ostream& os)
{
    if (cfg.format == "json") {
        os << o.report.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "field,value\n";
        flatten_csv(o.report, "", os);
    } else if (cfg.command == "formulas") {
        write_formula_table(o.report, os);
    } else {
        write_text(o.report, os);
        os << o.extra_text;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Families of pairwise cycle-different Hamiltonian paths in K_n"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* n_opt = sub->add_option("--n", cfg.n, "order of the complete graph")->check(CLI::Range(2, 64));
        if (needs_n)
            n_opt->required();
        sub->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list all canonical Hamiltonian paths of K_n");
    add_common(enumerate, true);
    enumerate->add_option("--out", cfg.out_path, "write the report to PATH");

    auto* exact = app.add_subcommand("exact", "exact maximum family size by clique search");
    add_common(exact, true);
    exact->add_option("--dspec", cfg.dspec, "admissible cycle lengths (all|odd|even|div=c|ndiv=c|in=l1,l2)");
    exact->add_option("--predicate", cfg.predicate, "difference relation")->check(CLI::IsMember({"cycle", "k4"}));
    exact->add_option("--budget", cfg.budget_seconds, "time budget in seconds")->check(CLI::PositiveNumber);
    exact->add_option("--out", cfg.out_path, "write the report to PATH");

    auto* construct = app.add_subcommand("construct", "build and verify an explicit family");
    add_common(construct, false);
    construct->add_option("--name", cfg.name, "construction")
        ->required()
        ->check(CLI::IsMember({"greedy", "bipartite", "block", "shifted-block", "fixed-endpoint", "k4", "sH", "m53"}));
    construct->add_option("--c", cfg.c, "block size / modulus");
    construct->add_option("--dspec", cfg.dspec, "admissible cycle lengths (greedy only)");
    construct->add_option("--predicate", cfg.predicate, "difference relation (greedy only)")
        ->check(CLI::IsMember({"cycle", "k4"}));
    construct->add_option("--seed", cfg.seed, "shuffle the greedy scan order");
    construct->add_option("--out", cfg.out_path, "write the certificate to PATH");

    auto* formulas = app.add_subcommand("formulas", "evaluate every closed-form bound at n");
    add_common(formulas, true);
    formulas->add_option("--c", cfg.c, "modulus for the divisibility bounds");
    formulas->add_option("--out", cfg.out_path, "write the report to PATH");

    auto* verify = app.add_subcommand("verify", "re-check a certificate file from scratch");
    verify->add_option("certificate", cfg.certificate_path, "certificate JSON")->required();
    verify->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    for (auto* sub : {enumerate, exact, construct, formulas, verify})
        if (sub->parsed())
            cfg.command = sub->get_name();
    if (cfg.command == "construct" && cfg.name != "m53" && cfg.n == 0) {
        err << "error: --n is required for construction '" << cfg.name << "'\n";
        return kConfigError;
    }

    Outcome outcome;
    try {
        if (cfg.command == "enumerate")
            outcome = cmd_enumerate(cfg);
        else if (cfg.command == "exact")
            outcome = cmd_exact(cfg);
        else if (cfg.command == "construct")
            outcome = cmd_construct(cfg);
        else if (cfg.command == "formulas")
            outcome = cmd_formulas(cfg);
        else
            outcome = cmd_verify(cfg);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    // construct writes its certificate to --out, the report always goes to out.
    if (!cfg.out_path.empty() && cfg.command != "construct") {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return kConfigError;
        }
        emit(cfg, outcome, file);
    } else {
        emit(cfg, outcome, out);
    }
    if (outcome.code == kVerificationFailed && outcome.report.contains("failure"))
        err << "verification failed at pair " << outcome.report["failure"]["pair"].dump() << ": "
            << outcome.report["failure"]["reason"].get<std::string>() << '\n';
    return outcome.code;
}

}  // namespace hamdiff::cli
