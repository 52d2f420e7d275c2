#include <effdom/error.hpp>
#include <effdom/hamming.hpp>
#include <effdom/search.hpp>
#include <effdom/spectral.hpp>
#include <effdom_tools/cli.hpp>
#include <effdom_tools/io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace effdom::cli {

namespace {

using io::json;

// Errors caused by the request itself rather than by the mathematics.
auto is_usage(Errc code) -> bool
{
    switch (code) {
    case Errc::Parse:
    case Errc::BadParameter:
    case Errc::NonPrimeP:
    case Errc::UnsupportedExtension:
    case Errc::FieldTooLarge:
    case Errc::SizeCapExceeded:
    case Errc::LengthMismatch:
    case Errc::ValueOutOfRange:
    case Errc::BadPartition:
    case Errc::BadConnectionSet:
    case Errc::BadK:
    case Errc::CellCountMismatch:
    case Errc::TrivialCase:
        return true;
    default:
        return false;
    }
}

auto size_cap_from_env() -> std::uint64_t
{
    const char * text = std::getenv("EFFDOM_SIZE_CAP");
    if (! text || ! *text)
        return default_size_cap;
    try {
        std::size_t used = 0;
        const auto cap = std::stoull(text, &used);
        if (used != std::string(text).size() || cap == 0)
            throw std::invalid_argument(text);
        return cap;
    } catch (const std::exception &) {
        throw Error(Errc::BadParameter, std::string("EFFDOM_SIZE_CAP must be a positive integer, got ") + text);
    }
}

struct FieldFlags
{
    unsigned p = 2;
    unsigned b = 1;

    auto add(CLI::App & cmd) -> void
    {
        cmd.add_option("--q", p, "Characteristic p (the field order when --b is omitted)")->required();
        cmd.add_option("--b", b, "Extension degree, giving GF(p^b)")->capture_default_str();
    }
    auto field() const -> Field { return Field(p, b); }
};

struct Options
{
    unsigned threads = 1;

    // gen
    std::string family;
    std::uint64_t alphabet = 0;
    std::size_t d = 0, n = 0, m = 0;
    FieldFlags gen_field;

    // shared file inputs
    std::string graph_file, function_file, partition_file, base_file;

    // hamming commands
    FieldFlags field;
    std::uint64_t k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 42;
    bool audit = false;

    // search
    std::int64_t j = 1;
    std::int64_t search_k = 1;
    bool count_only = false;
    bool first_only = false;
    std::uint64_t limit = default_node_limit;

    // spectrum
    bool as_function = false;

    // partition / cover / lift
    bool charpoly = false;
    std::int64_t multiplicity = 1;
    bool push_down = false;

    // translate
    std::string presentation = "hamming";
};

struct Context
{
    Options opt;
    std::uint64_t size_cap = default_size_cap;
    std::ostream & out;
    std::ostream & err;

    auto emit(const json & doc) -> void { out << doc.dump() << '\n'; }
};

auto run_gen(Context & ctx) -> int
{
    const auto & o = ctx.opt;
    const auto cap = ctx.size_cap;
    auto graph = [&]() -> Graph {
        if (o.family == "hamming") {
            if (o.alphabet > 0)
                return hamming_graph(o.alphabet, o.d, cap);
            return cayley_graph(hamming_presentation(o.gen_field.field(), o.d), cap);
        }
        if (o.family == "cube")
            return hamming_graph(2, o.d, cap);
        if (o.family == "folded-cube")
            return folded_cube(o.d, cap);
        if (o.family == "complete")
            return complete_graph(o.n);
        if (o.family == "cycle")
            return cycle_graph(o.n);
        if (o.family == "bipartite")
            return complete_bipartite_graph(o.m, o.n);
        throw Error(Errc::BadParameter, "unknown family " + o.family);
    }();
    ctx.emit(io::to_json(graph));
    return success;
}

auto run_verify(Context & ctx) -> int
{
    const auto g = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto f = io::function_from_json(io::read_file(ctx.opt.function_file));
    const auto report = verify_efficient(g, f);
    auto doc = io::document();
    doc["efficient"] = report.efficient;
    doc["k"] = report.observed_k ? json(*report.observed_k) : json(nullptr);
    doc["declared_k"] = f.k;
    doc["tight"] = report.tight;
    auto violations = json::array();
    for (const auto & v : report.violations)
        violations.push_back({{"vertex", v.vertex}, {"sum", v.sum}});
    doc["violations"] = std::move(violations);
    ctx.emit(doc);
    return report.efficient ? success : verification_failed;
}

auto run_construct(Context & ctx) -> int
{
    const auto field = ctx.opt.field.field();
    const auto profile = feasibility(field, ctx.opt.d);
    try {
        const auto built = construct_function(field, ctx.opt.d, ctx.opt.k, ctx.size_cap);
        auto doc = io::to_json(built.function);
        doc["provenance"] = {{"a", built.a}, {"m", built.m}, {"fibres", built.fibres}};
        ctx.emit(doc);
        return success;
    } catch (const Error & e) {
        if (e.code() != Errc::InfeasibleK)
            throw;
        auto doc = io::document();
        doc["error"] = to_string(e.code());
        doc["status"] = to_string(classify_k(profile, ctx.opt.k));
        doc["message"] = e.what();
        ctx.emit(doc);
        ctx.err << e.what() << '\n';
        return verification_failed;
    }
}

auto run_feasible(Context & ctx) -> int
{
    ctx.emit(io::to_json(feasibility(ctx.opt.field.field(), ctx.opt.d)));
    return success;
}

auto run_verify_plan(Context & ctx) -> int
{
    const auto plan = build_plan(ctx.opt.field.field(), ctx.opt.d);
    const auto result = ctx.opt.samples > 0 ? verify_plan_sampled(plan, ctx.opt.samples, ctx.opt.seed)
                                            : verify_plan_full(plan, ctx.size_cap);
    auto doc = io::to_json(result.certificate);
    doc["mode"] = result.sampled ? "sampled" : "full";
    doc["vertices_checked"] = result.vertices_checked;
    if (result.sampled)
        doc["seed"] = ctx.opt.seed;
    doc["partition"] = plan.profile.partition_description();
    if (ctx.opt.audit) {
        const auto audit = basis_audit(plan);
        doc["audit"] = {{"kernel_size", audit.kernel_size},
                        {"expected_kernel_size", audit.expected_kernel_size},
                        {"code_dimension", audit.code_dimension},
                        {"total_size", audit.total_size},
                        {"expected_total_size", audit.expected_total_size}};
    }
    ctx.emit(doc);
    return success;
}

auto run_spectrum(Context & ctx) -> int
{
    const auto g = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto report = minus_one_multiplicity(g);
    auto doc = io::document();
    doc["multiplicity"] = report.multiplicity;
    if (report.witness) {
        doc["witness"] = io::to_json(*report.witness);
        if (ctx.opt.as_function)
            doc["function"] = io::to_json(function_from_eigenvector(g, *report.witness));
    }
    ctx.emit(doc);
    return success;
}

auto run_search(Context & ctx) -> int
{
    const auto g = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    SearchConfig config;
    config.j = ctx.opt.j;
    config.k = ctx.opt.search_k;
    config.node_limit = ctx.opt.limit;
    config.count_only = ctx.opt.count_only;
    config.threads = ctx.opt.threads;

    auto doc = io::document();
    std::string diagnostic;
    if (ctx.opt.first_only) {
        const auto found = exists_efficient(g, config);
        doc["exists"] = found.witness.has_value();
        doc["witness"] = found.witness ? json(found.witness->values) : json(nullptr);
        doc["exhausted"] = found.exhausted;
        doc["nodes"] = found.nodes;
        diagnostic = found.diagnostic;
    } else {
        const auto outcome = enumerate_efficient(g, config);
        doc["count"] = outcome.count;
        doc["exhausted"] = outcome.exhausted;
        doc["nodes"] = outcome.nodes;
        if (! config.count_only) {
            auto functions = json::array();
            for (const auto & f : outcome.functions)
                functions.push_back(f.values);
            doc["functions"] = std::move(functions);
        }
        diagnostic = outcome.diagnostic;
    }
    if (! diagnostic.empty()) {
        doc["diagnostic"] = diagnostic;
        ctx.err << diagnostic << '\n';
    }
    ctx.emit(doc);
    return success;
}

auto run_spectrum_k(Context & ctx) -> int
{
    const auto g = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto spectrum = k_spectrum(g, ctx.opt.j, ctx.opt.limit, ctx.opt.threads);
    auto doc = io::document();
    auto counts = json::object();
    for (const auto & [k, count] : spectrum.counts)
        counts[std::to_string(k)] = count;
    doc["j"] = ctx.opt.j;
    doc["counts"] = std::move(counts);
    doc["incomplete"] = spectrum.incomplete;
    if (! spectrum.incomplete.empty())
        ctx.err << "NodeLimitExceeded for " << spectrum.incomplete.size() << " value(s) of k\n";
    ctx.emit(doc);
    return success;
}

auto run_partition(Context & ctx) -> int
{
    const auto g = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto pi = io::partition_from_json(io::read_file(ctx.opt.partition_file), g.order());
    const auto a = characteristic_matrix(g, pi);
    auto doc = io::document();
    doc["equitable"] = a.has_value();
    if (a) {
        doc["matrix"] = io::to_json(*a);
        const auto columns = dominatable_columns(*a);
        doc["dominatable"] = columns.has_value();
        doc["columns"] = columns ? json(*columns) : json(nullptr);
        if (a->row_sum())
            doc["eigen_check"] = dominatable_eigen_check(*a);
        if (ctx.opt.charpoly)
            doc["charpoly_divides"] = charpoly_divides_graph(g, pi);
    }
    ctx.emit(doc);
    return success;
}

auto run_cover(Context & ctx) -> int
{
    const auto x = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto y = io::graph_from_json(io::read_file(ctx.opt.base_file));
    const auto fibres = io::partition_from_json(io::read_file(ctx.opt.partition_file), x.order());
    const auto cert = ctx.opt.multiplicity == 1 ? verify_cover(x, fibres, y) : verify_kcover(x, fibres, y, ctx.opt.multiplicity);
    auto doc = cert ? io::to_json(*cert) : io::document();
    doc["certified"] = cert.has_value();
    ctx.emit(doc);
    return cert ? success : verification_failed;
}

auto run_lift(Context & ctx) -> int
{
    const auto x = io::graph_from_json(io::read_file(ctx.opt.graph_file));
    const auto y = io::graph_from_json(io::read_file(ctx.opt.base_file));
    const auto fibres = io::partition_from_json(io::read_file(ctx.opt.partition_file), x.order());
    const auto f = io::function_from_json(io::read_file(ctx.opt.function_file));
    const auto cert = verify_kcover(x, fibres, y, ctx.opt.multiplicity);
    if (! cert) {
        auto doc = io::document();
        doc["certified"] = false;
        ctx.emit(doc);
        ctx.err << "the partition does not certify the cover\n";
        return verification_failed;
    }
    if (ctx.opt.push_down) {
        const auto pushed = push(f, *cert);
        if (! pushed) {
            auto doc = io::document();
            doc["error"] = "NotConstantOnFibres";
            ctx.emit(doc);
            ctx.err << "function is not constant on the fibres\n";
            return verification_failed;
        }
        auto doc = io::to_json(*pushed);
        doc["efficient"] = verify_efficient(y, *pushed).efficient;
        ctx.emit(doc);
        return success;
    }
    const auto lifted = lift(f, *cert);
    auto doc = io::to_json(lifted);
    doc["efficient"] = verify_efficient(x, lifted).efficient;
    ctx.emit(doc);
    return success;
}

auto run_translate(Context & ctx) -> int
{
    const auto pres = ctx.opt.presentation == "folded-cube" ? folded_cube_presentation(ctx.opt.d)
                                                            : hamming_presentation(ctx.opt.field.field(), ctx.opt.d);
    const auto f = io::function_from_json(io::read_file(ctx.opt.function_file));
    const auto support = f.support();
    const auto translates = lee_translates(pres, support, ctx.size_cap);
    auto doc = io::to_json(translates.partition);
    doc["certificate"] = io::to_json(translates.certificate);
    ctx.emit(doc);
    return success;
}

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Context ctx{{}, default_size_cap, out, err};
    auto & o = ctx.opt;

    CLI::App app{"Efficient (j,k)-domination on graphs, with Hamming graph constructions", "effdom"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads for commands that split work")->check(CLI::Range(1U, 256U));

    auto * gen = app.add_subcommand("gen", "Generate a graph as Graph JSON");
    gen->add_option("--family", o.family, "hamming | cube | folded-cube | complete | cycle | bipartite")->required();
    gen->add_option("--alphabet", o.alphabet, "Hamming graph over an alphabet of this size, no field structure");
    auto * gen_q = gen->add_option("--q", o.gen_field.p, "Characteristic p for the field Hamming graph");
    gen->add_option("--b", o.gen_field.b, "Extension degree")->needs(gen_q);
    gen->add_option("--d", o.d, "Dimension");
    gen->add_option("--n", o.n, "Vertex count (complete, cycle) or second part size (bipartite)");
    gen->add_option("--m", o.m, "First part size (bipartite)");

    auto * verify = app.add_subcommand("verify", "Check (A + I) f = k 1");
    verify->add_option("--graph", o.graph_file)->required();
    verify->add_option("--function", o.function_file)->required();

    auto * construct = app.add_subcommand("construct", "Efficient (1,k) function on H(q,d) from the m-cover construction");
    o.field.add(*construct);
    construct->add_option("--d", o.d)->required();
    construct->add_option("--k", o.k)->required();

    auto * feasible = app.add_subcommand("feasible", "Feasible k for H(q,d)");
    FieldFlags & ff = o.field;
    feasible->add_option("--q", ff.p, "Characteristic p")->required();
    feasible->add_option("--b", ff.b, "Extension degree");
    feasible->add_option("--d", o.d)->required();

    auto * verify_plan = app.add_subcommand("verify-plan", "Certify the m-cover of H(q,d) over K_{q^a}");
    verify_plan->add_option("--q", ff.p, "Characteristic p")->required();
    verify_plan->add_option("--b", ff.b, "Extension degree");
    verify_plan->add_option("--d", o.d)->required();
    verify_plan->add_option("--sample", o.samples, "Check this many random vertices instead of all");
    verify_plan->add_option("--seed", o.seed, "Seed for --sample")->capture_default_str();
    verify_plan->add_flag("--audit", o.audit, "Also audit the explicit basis of T");

    auto * spectrum = app.add_subcommand("spectrum", "Multiplicity of -1 in the adjacency spectrum");
    spectrum->add_option("--graph", o.graph_file)->required();
    spectrum->add_flag("--as-function", o.as_function, "Also shift the witness into a dominating function");

    auto * search = app.add_subcommand("search", "Enumerate efficient (j,k)-dominating functions");
    search->add_option("--graph", o.graph_file)->required();
    search->add_option("--j", o.j)->required();
    search->add_option("--k", o.search_k)->required();
    search->add_flag("--count-only", o.count_only);
    search->add_flag("--first", o.first_only, "Stop at the first solution");
    search->add_option("--limit", o.limit, "Node limit")->capture_default_str();

    auto * spectrum_k = app.add_subcommand("spectrum-k", "Solution counts for every k");
    spectrum_k->add_option("--graph", o.graph_file)->required();
    spectrum_k->add_option("--j", o.j)->required();
    spectrum_k->add_option("--limit", o.limit, "Node limit per k")->capture_default_str();

    auto * partition = app.add_subcommand("partition", "Equitable and dominatable partition checks");
    partition->add_option("--graph", o.graph_file)->required();
    partition->add_option("--partition", o.partition_file)->required();
    partition->add_flag("--charpoly", o.charpoly, "Check that the quotient characteristic polynomial divides the graph's");

    auto * cover = app.add_subcommand("cover", "Certify a partition as the fibres of a (multi)cover");
    cover->add_option("--graph", o.graph_file, "Cover graph")->required();
    cover->add_option("--base", o.base_file, "Base graph")->required();
    cover->add_option("--partition", o.partition_file, "Fibres, cell i over base vertex i")->required();
    cover->add_option("--multiplicity", o.multiplicity, "m for an m-cover")->capture_default_str();

    auto * lift_cmd = app.add_subcommand("lift", "Lift a base function to the cover, or push one down");
    lift_cmd->add_option("--graph", o.graph_file, "Cover graph")->required();
    lift_cmd->add_option("--base", o.base_file, "Base graph")->required();
    lift_cmd->add_option("--partition", o.partition_file, "Fibres, cell i over base vertex i")->required();
    lift_cmd->add_option("--function", o.function_file)->required();
    lift_cmd->add_option("--multiplicity", o.multiplicity)->capture_default_str();
    lift_cmd->add_flag("--push", o.push_down, "Push a cover function down instead");

    auto * translate = app.add_subcommand("translate", "Translates of a perfect code as a cover of a complete graph");
    translate->add_option("--presentation", o.presentation, "hamming | folded-cube")->capture_default_str();
    translate->add_option("--q", ff.p, "Characteristic p (hamming)");
    translate->add_option("--b", ff.b, "Extension degree (hamming)");
    translate->add_option("--d", o.d)->required();
    translate->add_option("--function", o.function_file, "Function JSON whose support is the code")->required();

    auto usage = [&](const std::string & reason) {
        auto doc = io::document();
        doc["error"] = "Usage";
        doc["message"] = reason;
        out << doc.dump() << '\n';
        err << "effdom: " << reason << '\n';
        return usage_error;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError & e) {
        return usage(e.what());
    }

    try {
        ctx.size_cap = size_cap_from_env();
        if (gen->parsed())
            return run_gen(ctx);
        if (verify->parsed())
            return run_verify(ctx);
        if (construct->parsed())
            return run_construct(ctx);
        if (feasible->parsed())
            return run_feasible(ctx);
        if (verify_plan->parsed())
            return run_verify_plan(ctx);
        if (spectrum->parsed())
            return run_spectrum(ctx);
        if (search->parsed())
            return run_search(ctx);
        if (spectrum_k->parsed())
            return run_spectrum_k(ctx);
        if (partition->parsed())
            return run_partition(ctx);
        if (cover->parsed())
            return run_cover(ctx);
        if (lift_cmd->parsed())
            return run_lift(ctx);
        if (translate->parsed())
            return run_translate(ctx);
        return usage("no command given");
    } catch (const Error & e) {
        if (is_usage(e.code()))
            return usage(e.what());
        auto doc = io::document();
        doc["error"] = to_string(e.code());
        doc["message"] = e.what();
        out << doc.dump() << '\n';
        err << "effdom: " << e.what() << '\n';
        return verification_failed;
    }
}

}
