#include <hypertrans/cli.hpp>
#include <hypertrans/error.hpp>
#include <hypertrans/fd_infer.hpp>
#include <hypertrans/genbench.hpp>
#include <hypertrans/io.hpp>
#include <hypertrans/irredundant.hpp>
#include <hypertrans/localgen.hpp>
#include <hypertrans/multimember.hpp>
#include <hypertrans/transversality.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ht::cli {

namespace {
    struct InputError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto open_file(const std::string & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot open '" + path + "'");
        return in;
    }

    auto load_hypergraph(const std::string & path) -> Hypergraph
    {
        auto in = open_file(path);
        return parse_hypergraph(in);
    }

    /// Reduces a non-simple instance and says so on err.
    auto load_simple(const std::string & path, std::ostream & err) -> Hypergraph
    {
        auto h = load_hypergraph(path);
        if (is_simple(h))
            return h;
        auto r = min_reduce(h);
        err << "note: input is not simple; reduced from " << h.edge_count() << " to " << r.edge_count()
            << " edges\n";
        return r;
    }

    auto names() -> std::vector<std::string> { return {"berge", "mtminer", "mmcs", "local"}; }

    auto cmd_mt(const std::string & file, const std::string & algo, bool stream, bool show_parts, std::ostream & out,
            std::ostream & err) -> void
    {
        auto h = load_simple(file, err);
        auto a = *parse_algorithm(algo);

        if (show_parts && a == Algorithm::local) {
            auto d = decompose(h, min_traverse_witness(h));
            for (std::size_t i = 0; i < d.parts.size(); ++i)
                out << "# part " << i + 1 << " (pivot " << d.pivot_mt[i] << ")\n" << serialize_hypergraph(d.parts[i]);
            out << "# mts\n";
        }

        if (stream && a != Algorithm::local) {
            auto count = enumerate(h, static_cast<Backend>(a),
                    [&](const VertexSet & t) { out << t.to_string() << '\n'; });
            out << "# count: " << count << '\n';
            return;
        }
        auto mts = enumerate_with(h, a);
        write_mts(out, mts);
        if (stream)
            out << "# count: " << mts.size() << '\n';
    }

    auto cmd_tau(const std::string & file, std::ostream & out) -> void
    {
        auto r = transversality_report(load_hypergraph(file));
        out << r.greedy_k << ' ' << r.exact_tau << ' ' << (r.tight ? "true" : "false") << '\n';
    }

    auto cmd_tmm(const std::string & file, const std::string & mode, std::ostream & out) -> void
    {
        auto r = extract_tmm(load_hypergraph(file), *parse_tmm_mode(mode));
        out << r.tau << '\n';
        write_mts(out, r.tmms);
        out << "# coverage: " << r.coverage.at(r.tmms[0]) << '\n';
    }

    auto cmd_irr(const std::string & file, bool expand, std::ostream & out, std::ostream & err) -> void
    {
        auto h = load_simple(file, err);
        auto imt = imt_extract(h, Backend::mmcs);
        out << "# groups\n";
        write_generalized_nodes(out, imt.generalized);
        out << "# irredundant hypergraph\n" << serialize_hypergraph(imt.irredundant_h);
        out << "# irredundant mts\n";
        write_mts(out, imt.irredundant_mts);
        if (expand) {
            auto full = expand_mts(imt.irredundant_mts, imt.generalized);
            out << "# mts\n";
            write_mts(out, full);
            out << "# theta: " << format_double(compaction_rate(full.size(), imt.irredundant_mts.size())) << '\n';
        }
    }

    auto cmd_expand(const std::string & mt_file, const std::string & gn_file, std::ostream & out) -> void
    {
        auto mt_in = open_file(mt_file);
        auto mts = MtSet(parse_vertex_sets(mt_in));
        auto gn_in = open_file(gn_file);
        auto gn = parse_generalized_nodes(gn_in);
        write_mts(out, expand_mts(mts, gn));
    }

    auto cmd_fd_cover(const std::string & file, bool concise, bool conditional, std::ostream & out) -> void
    {
        auto in = open_file(file);
        auto r = parse_relation(in);

        out << "# attributes:";
        for (const auto & a : r.attributes)
            out << ' ' << a;
        out << '\n';

        auto grouped = (concise || conditional) ? concise_cover(r) : FdCover{};
        auto shown = concise ? grouped : minimal_cover(r);

        std::vector<std::string> lines;
        for (const auto & fd : shown.fds)
            lines.push_back(format_fd(r, fd));
        std::sort(lines.begin(), lines.end());
        for (const auto & l : lines)
            out << l << '\n';
        for (const auto & d : shown.diagnostics)
            out << "# note: " << d << '\n';

        if (concise)
            for (const auto & [a, gn] : grouped.per_attribute_gn) {
                out << "# groups " << r.attributes[a] << '\n';
                for (const auto & g : gn.groups) {
                    out << r.attributes[g.representative] << ':';
                    for (auto m : g.members)
                        out << ' ' << r.attributes[m];
                    out << '\n';
                }
            }

        if (conditional) {
            auto ag = agree_sets(r);
            std::vector<std::string> cond;
            for (const auto & [a, gn] : grouped.per_attribute_gn)
                for (const auto & c : conditional_fds(r, a, gn, ag)) {
                    std::ostringstream s;
                    s << "cond " << r.attributes[a] << ": " << format_fd(r, c.fd) << " [";
                    for (std::size_t i = 0; i < c.tuples.size(); ++i)
                        s << (i ? " " : "") << c.tuples[i] + 1;
                    s << ']';
                    if (! c.holds_on_union)
                        s << " (pairwise only)";
                    cond.push_back(s.str());
                }
            std::sort(cond.begin(), cond.end());
            for (const auto & l : cond)
                out << l << '\n';
        }
    }

    auto seed_from_env() -> std::uint64_t
    {
        if (auto s = std::getenv("HT_SEED")) {
            try {
                std::size_t used = 0;
                auto v = std::stoull(s, &used);
                if (used == std::string(s).size())
                    return v;
            }
            catch (const std::exception &) {
            }
            throw DomainError("HT_SEED is not an unsigned integer");
        }
        return 1;
    }

    auto cmd_gen(const std::vector<std::string> & random, const std::vector<std::size_t> & worst,
            const std::string & path, std::ostream & out) -> void
    {
        std::ostringstream text;
        if (! random.empty()) {
            RandomSpec spec;
            try {
                spec.n = std::stoull(random[0]);
                spec.m = std::stoull(random[1]);
                spec.p_l = std::stod(random[2]);
                spec.p_u = std::stod(random[3]);
                spec.seed = random.size() == 5 ? std::stoull(random[4]) : seed_from_env();
            }
            catch (const std::logic_error &) {
                throw CLI::ValidationError("--random", "expects n m p_l p_u [seed]");
            }
            text << "# rng: " << rng_name << " seed: " << spec.seed << '\n' << serialize_hypergraph(gen_random(spec));
        }
        else {
            text << "# worst-case m: " << worst[0] << " block: " << worst[1] << '\n'
                 << serialize_hypergraph(gen_worst_case(worst[0], worst[1]));
        }

        if (path.empty() || path == "-")
            out << text.str();
        else {
            std::ofstream f(path);
            if (! (f << text.str()))
                throw InputError("cannot write '" + path + "'");
        }
    }

    auto cmd_bench(const std::string & dir, const std::vector<std::string> & algos, bool irr, std::ostream & out)
            -> void
    {
        namespace fs = std::filesystem;
        if (! fs::is_directory(dir))
            throw InputError("'" + dir + "' is not a directory");
        std::vector<fs::path> files;
        for (const auto & e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".dat")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());

        std::vector<BenchInstance> instances;
        for (const auto & f : files)
            instances.push_back({f.stem().string(), load_hypergraph(f.string())});
        std::vector<Algorithm> as;
        for (const auto & a : algos)
            as.push_back(*parse_algorithm(a));
        write_bench_csv(out, bench_run(instances, as, irr));
    }

    auto cmd_stats(const std::string & file, std::ostream & out) -> void
    {
        auto h = load_hypergraph(file);
        auto p = profile(h);
        auto t = transversality_report(h);
        out << "n: " << p.n << '\n'
            << "m: " << p.m << '\n'
            << "rank: " << p.rank << '\n'
            << "antirank: " << p.antirank << '\n'
            << "simple: " << (p.simple ? "true" : "false") << '\n'
            << "sperner: " << (satisfies_sperner_bound(min_reduce(h)) ? "true" : "false") << '\n'
            << "tau: " << t.exact_tau << '\n'
            << "greedy_k: " << t.greedy_k << '\n';
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Minimal transversal enumeration for hypergraphs", "htrans"};
    app.require_subcommand(1, 1);

    std::string file, second, algo = "mmcs", mode = "om2d", path, dir;
    bool stream = false, show_parts = false, expand = false, concise = false, conditional = false, irr = false;
    std::vector<std::string> random, algos{"mmcs"};
    std::vector<std::size_t> worst;

    auto mt = app.add_subcommand("mt", "Enumerate minimal transversals");
    mt->add_option("file", file, "Hypergraph (.dat)")->required();
    mt->add_option("--algo", algo, "berge, mtminer, mmcs or local")->check(CLI::IsMember(names()));
    mt->add_flag("--stream", stream, "Emit in discovery order with a trailing count");
    mt->add_flag("--show-parts", show_parts, "Print the decomposition (local only)");

    auto tau = app.add_subcommand("tau", "Greedy bound, exact tau and tightness");
    tau->add_option("file", file, "Hypergraph (.dat)")->required();

    auto tmm = app.add_subcommand("tmm", "Multi-member minimal transversals");
    tmm->add_option("file", file, "Hypergraph (.dat)")->required();
    tmm->add_option("--mode", mode, "m2d or om2d")->check(CLI::IsMember({"m2d", "om2d"}));

    auto irr_cmd = app.add_subcommand("irr", "Generalized nodes and irredundant transversals");
    irr_cmd->add_option("file", file, "Hypergraph (.dat)")->required();
    irr_cmd->add_flag("--expand", expand, "Also print every transversal and theta");

    auto exp = app.add_subcommand("expand", "Expand irredundant transversals by their groups");
    exp->add_option("mtfile", file, "Irredundant transversals")->required();
    exp->add_option("gnfile", second, "Groups, 'rep: members' per line")->required();

    auto fd = app.add_subcommand("fd-cover", "Minimal cover of the functional dependencies of a CSV relation");
    fd->add_option("csv", file, "Relation with a header row")->required();
    fd->add_flag("--concise", concise, "Print the irredundant cover and its groups");
    fd->add_flag("--conditional", conditional, "Add conditional dependencies");

    auto gen = app.add_subcommand("gen", "Generate an instance");
    auto rnd = gen->add_option("--random", random, "n m p_l p_u [seed]")->expected(4, 5);
    auto wc = gen->add_option("--worst", worst, "m block")->expected(2);
    rnd->excludes(wc);
    gen->add_option("-o,--output", path, "Output path (default standard output)");

    auto bench = app.add_subcommand("bench", "Benchmark every .dat file of a directory");
    bench->add_option("--dir", dir, "Instance directory")->required();
    bench->add_option("--algos", algos, "Comma-separated algorithms")->delimiter(',')->check(CLI::IsMember(names()));
    bench->add_flag("--irr", irr, "Add irredundant count and theta");

    auto stats = app.add_subcommand("stats", "Profile and transversality number");
    stats->add_option("file", file, "Hypergraph (.dat)")->required();

    std::vector<std::string> argv_store{"htrans"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto & a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (gen->parsed() && random.empty() && worst.empty())
            throw CLI::RequiredError("gen needs --random or --worst");
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        if (mt->parsed())
            cmd_mt(file, algo, stream, show_parts, out, err);
        else if (tau->parsed())
            cmd_tau(file, out);
        else if (tmm->parsed())
            cmd_tmm(file, mode, out);
        else if (irr_cmd->parsed())
            cmd_irr(file, expand, out, err);
        else if (exp->parsed())
            cmd_expand(file, second, out);
        else if (fd->parsed())
            cmd_fd_cover(file, concise, conditional, out);
        else if (gen->parsed())
            cmd_gen(random, worst, path, out);
        else if (bench->parsed())
            cmd_bench(dir, algos, irr, out);
        else if (stats->parsed())
            cmd_stats(file, out);
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}

} // namespace ht::cli
