#include "cli.hpp"

#include "chibound/bounds.hpp"
#include "chibound/canonical.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/error.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/lemma.hpp"
#include "chibound/report.hpp"
#include "chibound/search.hpp"
#include "chibound/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace chibound::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Common {
    std::string format = "text";
    int jobs = 0;
    bool deterministic = false;
    std::string ramsey_config;
};

struct InputOptions {
    std::string input = "-";
    std::string input_format = "graph6";
    std::string on_parse_error = "abort";
};

struct Context {
    Common common;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    Clock::time_point start = Clock::now();

    int jobs() const { return common.jobs > 0 ? common.jobs : default_jobs(); }
};

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

int emit(Context& ctx, Report& report, int code)
{
    report.stats["exit_code"] = code;
    if (!ctx.common.deterministic) {
        report.stats["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - ctx.start).count();
        report.stats["timestamp"] = utc_timestamp();
    }
    ctx.out << render(report, parse_report_format(ctx.common.format));
    return code;
}

void add_input_options(CLI::App* cmd, InputOptions& opts)
{
    cmd->add_option("--input", opts.input, "Input file, or - for standard input")->capture_default_str();
    cmd->add_option("--input-format", opts.input_format, "graph6 (one graph per line) or edgelist (one graph)")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--on-parse-error", opts.on_parse_error, "abort or skip malformed lines")
        ->check(CLI::IsMember({"abort", "skip"}))
        ->capture_default_str();
}

struct LoadedGraphs {
    std::vector<GraphRecord> records;
    std::vector<LineError> errors;
};

LoadedGraphs load_graphs(Context& ctx, const InputOptions& opts)
{
    std::ifstream file;
    std::istream* stream = &ctx.in;
    std::string name = "stdin";
    if (opts.input != "-") {
        file.open(opts.input);
        if (!file)
            throw Error(Errc::ParseError, "cannot open " + opts.input);
        stream = &file;
        name = opts.input;
    }
    LoadedGraphs loaded;
    if (opts.input_format == "edgelist") {
        std::ostringstream buf;
        buf << stream->rdbuf();
        const std::string text = buf.str();
        if (text.find_first_not_of(" \t\r\n") != std::string::npos)
            loaded.records.push_back({parse_edge_list(text), name});
        return loaded;
    }
    auto parsed = read_graph_stream(*stream, name,
                                    opts.on_parse_error == "skip" ? ParseErrorPolicy::Skip : ParseErrorPolicy::Abort);
    loaded.records = std::move(parsed.records);
    loaded.errors = std::move(parsed.errors);
    return loaded;
}

void record_parse_errors(Report& report, const std::vector<LineError>& errors)
{
    report.stats["parse_errors"] = static_cast<long long>(errors.size());
    for (const auto& e : errors)
        report.notes.push_back("skipped line " + std::to_string(e.line) + ": " + e.message);
}

std::vector<Graph> graphs_of(const std::vector<GraphRecord>& records)
{
    std::vector<Graph> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(r.graph);
    return out;
}

std::pair<int, int> n_range(int n, int max_n, int default_max)
{
    if (n > 0 && max_n > 0)
        throw Error(Errc::InvalidParams, "--n and --max-n are mutually exclusive");
    if (n > 0)
        return {n, n};
    return {1, max_n > 0 ? max_n : default_max};
}

RamseyTable ramsey_table(const Context& ctx)
{
    return RamseyTable::load(ctx.common.ramsey_config.empty() ? default_ramsey_config_path()
                                                              : ctx.common.ramsey_config);
}

// ---------------------------------------------------------------- commands

int cmd_stats(Context& ctx, const InputOptions& opts)
{
    Report report;
    report.command = "stats";
    report.params["input"] = opts.input;
    report.params["input_format"] = opts.input_format;
    const auto loaded = load_graphs(ctx, opts);
    const auto graphs = graphs_of(loaded.records);
    const auto stats = stats_sweep(graphs, ctx.jobs());
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto& s = stats[i];
        Json row;
        row["source"] = loaded.records[i].source;
        row["n"] = s.n;
        row["m"] = s.m;
        row["omega"] = s.omega;
        row["alpha"] = s.alpha;
        row["chi"] = s.chi;
        row["delta"] = s.delta;
        row["three_k1_free"] = s.three_k1_free;
        report.rows.push_back(std::move(row));
    }
    report.stats["graphs"] = static_cast<long long>(stats.size());
    record_parse_errors(report, loaded.errors);
    return emit(ctx, report, kOk);
}

struct OmegaSummary {
    long long graphs = 0;
    int max_chi = 0;
    std::map<std::string, std::int64_t> min_slack;
    std::map<std::string, std::int64_t> bound;
};

int cmd_verify_bounds(Context& ctx, int n, int max_n)
{
    const auto [lo, hi] = n_range(n, max_n, 8);
    Report report;
    report.command = "verify-bounds";
    report.params["min_n"] = lo;
    report.params["max_n"] = hi;

    static const char* kNames[] = {"lemma1", "lemma2", "table1", "reed", "conjecture2"};
    std::map<std::string, long long> proven_violations;
    std::map<std::string, long long> other_violations;
    for (const char* name : kNames) {
        proven_violations[name] = 0;
        other_violations[name] = 0;
    }
    long long total = 0;

    for (int order = lo; order <= hi; ++order) {
        std::vector<Graph> family;
        enumerate_triangle_free(order, [&](const Graph& g) { family.push_back(complement(g)); },
                                {ctx.jobs()});
        const auto reports = bounds_sweep(family, ctx.jobs());
        total += static_cast<long long>(reports.size());

        std::map<int, OmegaSummary> by_omega;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            auto& sum = by_omega[r.omega];
            ++sum.graphs;
            sum.max_chi = std::max(sum.max_chi, r.chi);
            for (const auto& e : r.entries) {
                if (!e.applicable)
                    continue;
                sum.bound[e.name] = e.value;
                auto it = sum.min_slack.find(e.name);
                if (it == sum.min_slack.end() || e.slack < it->second)
                    sum.min_slack[e.name] = e.slack;
                if (e.satisfied())
                    continue;
                (e.proven ? proven_violations : other_violations)[e.name] += 1;
                Json v;
                v["graph6"] = emit_graph6(family[i]);
                v["n"] = r.n;
                v["omega"] = r.omega;
                v["alpha"] = r.alpha;
                v["delta"] = r.delta;
                v["chi"] = r.chi;
                v["bound"] = e.name;
                v["value"] = e.value;
                v["proven"] = e.proven;
                report.violations.push_back(std::move(v));
            }
        }
        for (const auto& [omega, sum] : by_omega) {
            Json row;
            row["n"] = order;
            row["omega"] = omega;
            row["graphs"] = sum.graphs;
            row["max_chi"] = sum.max_chi;
            for (const char* name : kNames) {
                // Inapplicable bounds stay null so every row has the same columns.
                auto b = sum.bound.find(name);
                const bool has = b != sum.bound.end();
                // reed and conjecture2 depend on the degree, so only their slack is per omega.
                if (std::string_view(name) != "reed" && std::string_view(name) != "conjecture2")
                    row[std::string(name) + "_bound"] = has ? Json(b->second) : Json();
                row[std::string(name) + "_min_slack"] = has ? Json(sum.min_slack.at(name)) : Json();
            }
            report.rows.push_back(std::move(row));
        }
    }

    long long proven_total = 0;
    Json counts = Json::object();
    for (const char* name : kNames) {
        counts[name] = {{"proven_range", proven_violations[name]}, {"unproven", other_violations[name]}};
        proven_total += proven_violations[name];
    }
    report.stats["graphs"] = total;
    report.stats["violations"] = counts;
    report.stats["proven_violations"] = proven_total;
    return emit(ctx, report, proven_total > 0 ? kInconsistent : kOk);
}

int cmd_verify_ramsey(Context& ctx, int k, int n, int max_n)
{
    if (k < 1)
        throw Error(Errc::InvalidParams, "--k must be positive");
    const auto [lo, hi] = n_range(n, max_n, 0);
    if (hi < 1)
        throw Error(Errc::InvalidParams, "give --n or --max-n");
    const auto table = ramsey_table(ctx);
    const auto known = table.known(k);

    Report report;
    report.command = "verify-ramsey";
    report.params["k"] = k;
    report.params["min_n"] = lo;
    report.params["max_n"] = hi;
    report.stats["known_lower"] = known.lower;
    report.stats["known_upper"] = known.upper;
    report.stats["source"] = known.source;

    bool inconsistent = false;
    for (int order = lo; order <= hi; ++order) {
        long long count = 0;
        enumerate_ramsey(order, k, [&](const RamseyWitness&) { ++count; }, {ctx.jobs()});
        // Witnesses exist exactly for n < R(3,k).
        std::string expected = "open";
        bool consistent = true;
        if (order >= known.upper) {
            expected = "empty";
            consistent = count == 0;
        } else if (order < known.lower) {
            expected = "nonempty";
            consistent = count > 0;
        }
        inconsistent = inconsistent || !consistent;
        Json row;
        row["k"] = k;
        row["n"] = order;
        row["count"] = count;
        row["expected"] = expected;
        row["consistent"] = consistent;
        report.rows.push_back(std::move(row));
        if (!consistent) {
            Json v;
            v["k"] = k;
            v["n"] = order;
            v["count"] = count;
            v["expected"] = expected;
            report.violations.push_back(std::move(v));
        }
    }
    return emit(ctx, report, inconsistent ? kInconsistent : kOk);
}

Json identity_json(const IdentityCheck& c)
{
    return Json{{"name", c.name}, {"definitional", c.definitional}, {"relation", c.relation},
                {"lhs", c.lhs},   {"rhs", c.rhs},                   {"holds", c.holds}};
}

int cmd_lemma(Context& ctx, const InputOptions& opts)
{
    Report report;
    report.command = "lemma";
    report.params["input"] = opts.input;
    const auto loaded = load_graphs(ctx, opts);
    const auto graphs = graphs_of(loaded.records);
    const auto replays = lemma_sweep(graphs, ctx.jobs());

    long long definitional_failures = 0;
    long long skipped = 0;
    long long not_found = 0;
    for (std::size_t i = 0; i < replays.size(); ++i) {
        const auto& rp = replays[i];
        Json row;
        row["source"] = loaded.records[i].source;
        row["n"] = graphs[i].order();
        if (!rp.applicable) {
            row["status"] = "skipped";
            report.notes.push_back(loaded.records[i].source + ": skipped, graph has an independent triple");
            ++skipped;
            report.rows.push_back(std::move(row));
            continue;
        }
        if (!rp.partition) {
            row["status"] = "no-isolating-colouring";
            ++not_found;
            report.rows.push_back(std::move(row));
            continue;
        }
        const auto& lp = *rp.partition;
        row["status"] = "ok";
        row["u"] = lp.u;
        row["r"] = lp.r;
        row["s"] = lp.s;
        row["t"] = lp.t;
        row["k"] = lp.k;
        row["p"] = lp.p;
        row["delta"] = lp.delta;
        row["chi"] = lp.chi;
        row["rerouted"] = lp.rerouted;
        Json identities = Json::array();
        for (const auto& id : rp.identities) {
            row[id.name] = id.holds ? "holds" : "fails";
            if (id.definitional && !id.holds) {
                ++definitional_failures;
                Json v = identity_json(id);
                v["source"] = loaded.records[i].source;
                v["graph6"] = emit_graph6(graphs[i]);
                report.violations.push_back(std::move(v));
            }
            identities.push_back(identity_json(id));
        }
        Json claims = Json::array();
        for (const auto& c : rp.claims.claims) {
            if (c.name.starts_with("claim"))
                row[c.name] = claim_status_name(c.status);
            claims.push_back(Json{{"name", c.name}, {"status", claim_status_name(c.status)}, {"witness", c.witness}});
        }
        row["identities"] = std::move(identities);
        row["claims"] = std::move(claims);
        row["sets"] = Json{{"v_r", lp.v_r.to_vector()}, {"v_s", lp.v_s.to_vector()}, {"v_sp", lp.v_sp.to_vector()},
                           {"v_t", lp.v_t.to_vector()}, {"v_tp", lp.v_tp.to_vector()}, {"v_k", lp.v_k.to_vector()}};
        report.rows.push_back(std::move(row));
    }
    report.stats["graphs"] = static_cast<long long>(replays.size());
    report.stats["skipped"] = skipped;
    report.stats["no_isolating_colouring"] = not_found;
    report.stats["definitional_failures"] = definitional_failures;
    record_parse_errors(report, loaded.errors);
    return emit(ctx, report, definitional_failures > 0 ? kInconsistent : kOk);
}

int cmd_table1(Context& ctx)
{
    Report report;
    report.command = "table1";
    for (int omega = kTableMin; omega <= kTableMax; ++omega) {
        const bool odd = omega % 2 == 1;
        const auto formula = odd ? lemma1_bound(omega) : lemma2_bound(omega);
        const auto tabulated = table1_bound(omega);
        Json row;
        row["omega_plus_1"] = omega + 1;
        row["omega"] = omega;
        row["chi_bound"] = tabulated;
        row["formula"] = odd ? "(w^2+12w-13)/8" : "(w^2+10w)/8";
        row["formula_value"] = formula;
        row["strengthened"] = tabulated < formula;
        report.rows.push_back(std::move(row));
    }
    return emit(ctx, report, kOk);
}

int cmd_search(Context& ctx, const SearchParams& params, std::string output)
{
    params.validate();
    Report report;
    report.command = "search";
    report.params["n"] = params.n;
    report.params["k"] = params.k;
    report.params["seed"] = params.seed;
    report.params["max_iterations"] = params.max_iterations;
    report.params["restarts"] = params.restarts;
    report.params["initial_temperature"] = params.initial_temperature;
    report.params["cooling"] = params.cooling;

    const auto outcome = anneal_search(params, ctx.jobs());
    Json row;
    row["n"] = params.n;
    row["k"] = params.k;
    row["restarts_run"] = outcome.restarts_run;
    row["iterations"] = outcome.iterations;
    if (!outcome.witness) {
        row["result"] = "exhausted";
        report.rows.push_back(std::move(row));
        return emit(ctx, report, kExhausted);
    }
    const auto& w = *outcome.witness;
    const auto& searched = std::get<Searched>(w.provenance());
    const std::string g6 = w.canonical() ? w.canonical()->bytes : emit_graph6(w.graph());
    if (output.empty())
        output = "ramsey_3_" + std::to_string(params.k) + "_n" + std::to_string(params.n) + ".g6";
    {
        std::ofstream f(output);
        if (!f)
            throw Error(Errc::InvalidParams, "cannot write " + output);
        f << g6 << '\n';
    }
    Json sidecar;
    sidecar["n"] = params.n;
    sidecar["k"] = params.k;
    sidecar["graph6"] = g6;
    sidecar["canonical"] = w.canonical().has_value();
    sidecar["provenance"] = provenance_kind(w.provenance());
    sidecar["seed"] = searched.seed;
    sidecar["restart"] = searched.restart;
    sidecar["iterations"] = searched.iterations;
    {
        std::ofstream f(output + ".json");
        if (!f)
            throw Error(Errc::InvalidParams, "cannot write " + output + ".json");
        f << sidecar.dump(2) << '\n';
    }
    row["result"] = "witness";
    row["restart"] = searched.restart;
    row["graph6"] = g6;
    row["output"] = output;
    report.rows.push_back(std::move(row));
    return emit(ctx, report, kOk);
}

int cmd_enumerate(Context& ctx, int n, int k, const std::string& output)
{
    std::ofstream file;
    std::ostream* sink = &ctx.out;
    if (!output.empty()) {
        file.open(output);
        if (!file)
            throw Error(Errc::InvalidParams, "cannot write " + output);
        sink = &file;
    }
    EnumStats stats;
    if (k > 0)
        stats = enumerate_ramsey(n, k, [&](const RamseyWitness& w) { *sink << emit_graph6(w.graph()) << '\n'; },
                                 {ctx.jobs()});
    else
        stats = enumerate_triangle_free(n, [&](const Graph& g) { *sink << emit_graph6(g) << '\n'; }, {ctx.jobs()});

    Report report;
    report.command = "enumerate";
    report.params["n"] = n;
    if (k > 0)
        report.params["k"] = k;
    Json row;
    row["n"] = stats.n;
    row["predicate"] = stats.predicate;
    row["count"] = stats.count;
    row["tree_nodes"] = stats.nodes;
    report.rows.push_back(std::move(row));
    if (!ctx.common.deterministic)
        report.stats["enumeration_seconds"] = stats.seconds;
    // Graphs already went to stdout when no file was given.
    if (output.empty()) {
        Context quiet{ctx.common, ctx.in, ctx.err, ctx.err, ctx.start};
        return emit(quiet, report, kOk);
    }
    return emit(ctx, report, kOk);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Context ctx{Common{}, in, out, err};
    CLI::App app{"Exact chromatic-bound and R(3,k) verification for graphs without independent triples"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.common.format, "Report format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", ctx.common.jobs, "Worker threads (1 = serial reference path; default: all cores)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--deterministic", ctx.common.deterministic, "Omit timestamps and timings from reports");
    app.add_option("--ramsey-config", ctx.common.ramsey_config, "R(3,k) knowledge file")
        ->default_str(default_ramsey_config_path());

    InputOptions stats_in;
    auto* stats = app.add_subcommand("stats", "Invariants of each input graph");
    add_input_options(stats, stats_in);

    int vb_n = 0;
    int vb_max = 0;
    auto* vbounds = app.add_subcommand("verify-bounds",
                                       "Check every bound on all graphs without independent triples on n vertices");
    vbounds->add_option("--n", vb_n, "Single order")->check(CLI::Range(1, kMaxTriangleFreeOrder));
    vbounds->add_option("--max-n", vb_max, "Orders 1..max-n (default 8)")->check(CLI::Range(1, kMaxTriangleFreeOrder));

    int vr_k = 0;
    int vr_n = 0;
    int vr_max = 0;
    auto* vramsey = app.add_subcommand("verify-ramsey", "Count Ramsey(3,k) graphs and compare with known R(3,k)");
    vramsey->add_option("--k", vr_k, "Forbidden independent-set size")->required()->check(CLI::Range(1, 12));
    vramsey->add_option("--n", vr_n, "Single order")->check(CLI::Range(1, kMaxRamseyOrder));
    vramsey->add_option("--max-n", vr_max, "Orders 1..max-n")->check(CLI::Range(1, kMaxRamseyOrder));

    InputOptions lemma_in;
    auto* lemma = app.add_subcommand("lemma", "Replay the max-degree vertex partition on each input graph");
    add_input_options(lemma, lemma_in);

    auto* table1 = app.add_subcommand("table1", "Print the tabulated chromatic bounds");

    SearchParams sp;
    std::string search_out;
    auto* search = app.add_subcommand("search", "Simulated-annealing search for a Ramsey(3,k) witness");
    search->add_option("--n", sp.n, "Vertices")->required();
    search->add_option("--k", sp.k, "Forbidden independent-set size")->required();
    search->add_option("--seed", sp.seed, "RNG seed")->capture_default_str();
    search->add_option("--max-iterations", sp.max_iterations, "Moves per restart")->capture_default_str();
    search->add_option("--restarts", sp.restarts, "Independent restarts")->capture_default_str();
    search->add_option("--temperature", sp.initial_temperature, "Initial temperature")->capture_default_str();
    search->add_option("--cooling", sp.cooling, "Cooling factor per n(n-1)/2 moves")->capture_default_str();
    search->add_option("--output", search_out, "Witness graph6 path (sidecar gets .json appended)");

    int en_n = 0;
    int en_k = 0;
    std::string en_out;
    auto* enumerate = app.add_subcommand("enumerate", "Write triangle-free (or Ramsey(3,k)) graphs as graph6");
    enumerate->add_option("--n", en_n, "Vertices")->required()->check(CLI::Range(1, kMaxRamseyOrder));
    enumerate->add_option("--k", en_k, "Also require independence number < k")->check(CLI::Range(1, 12));
    enumerate->add_option("--output", en_out, "graph6 output path (default: stdout, report to stderr)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*stats)
            return cmd_stats(ctx, stats_in);
        if (*vbounds)
            return cmd_verify_bounds(ctx, vb_n, vb_max);
        if (*vramsey)
            return cmd_verify_ramsey(ctx, vr_k, vr_n, vr_max);
        if (*lemma)
            return cmd_lemma(ctx, lemma_in);
        if (*table1)
            return cmd_table1(ctx);
        if (*search)
            return cmd_search(ctx, sp, search_out);
        if (*enumerate)
            return cmd_enumerate(ctx, en_n, en_k, en_out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace chibound::cli
