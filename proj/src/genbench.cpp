#include <hypertrans/error.hpp>
#include <hypertrans/genbench.hpp>
#include <hypertrans/irredundant.hpp>
#include <hypertrans/localgen.hpp>
#include <hypertrans/transversality.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <random>

namespace ht {

auto algorithm_name(Algorithm a) -> std::string_view
{
    switch (a) {
        case Algorithm::berge: return "berge";
        case Algorithm::mtminer: return "mtminer";
        case Algorithm::mmcs: return "mmcs";
        case Algorithm::local: return "local";
    }
    return "?";
}

auto parse_algorithm(std::string_view name) -> std::optional<Algorithm>
{
    if (name == "local")
        return Algorithm::local;
    if (auto b = parse_backend(name))
        return static_cast<Algorithm>(*b);
    return std::nullopt;
}

auto enumerate_with(const Hypergraph & h, Algorithm a) -> MtSet
{
    if (a == Algorithm::local)
        return enumerate_local(h, Backend::mmcs);
    return enumerate(h, static_cast<Backend>(a));
}

auto gen_random(const RandomSpec & spec) -> Hypergraph
{
    if (spec.n < 1 || spec.m < 1)
        throw DomainError("n and m must be at least 1");
    if (! (0.0 <= spec.p_l && spec.p_l <= spec.p_u && spec.p_u <= 1.0))
        throw DomainError("need 0 <= p_l <= p_u <= 1");

    // std distributions are implementation-defined, so convert the bits by hand
    std::mt19937_64 rng(spec.seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<VertexSet> edges;
    while (edges.size() < spec.m) {
        double p = spec.p_l + (spec.p_u - spec.p_l) * uniform();
        std::vector<Vertex> e;
        for (std::size_t v = 1; v <= spec.n; ++v)
            if (uniform() < p)
                e.push_back(v);
        if (! e.empty())
            edges.emplace_back(std::move(e));
    }
    return Hypergraph(std::move(edges));
}

auto gen_worst_case(std::size_t m, std::size_t block) -> Hypergraph
{
    if (m < 1 || block < 1)
        throw DomainError("m and block must be at least 1");
    std::vector<VertexSet> edges;
    Vertex next = 1;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Vertex> e;
        for (std::size_t j = 0; j < block; ++j)
            e.push_back(next++);
        edges.emplace_back(std::move(e));
    }
    return Hypergraph(std::move(edges));
}

auto bench_run(const std::vector<BenchInstance> & instances, const std::vector<Algorithm> & algorithms, bool with_irr)
        -> std::vector<BenchRow>
{
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (const auto & inst : instances) {
        for (auto a : algorithms) {
            BenchRow row;
            row.id = inst.id;
            row.backend = std::string(algorithm_name(a));
            try {
                auto h = min_reduce(inst.h);
                row.n = h.order();
                row.m = h.edge_count();

                (void) enumerate_with(h, a);
                auto start = clock::now();
                auto mts = enumerate_with(h, a);
                row.ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();

                row.mt_count = mts.size();
                row.tau = exact_tau(h);
                if (with_irr) {
                    auto imt = imt_extract(h, a == Algorithm::local ? Backend::mmcs : static_cast<Backend>(a));
                    row.irr_count = imt.irredundant_mts.size();
                    row.theta = compaction_rate(*row.mt_count, *row.irr_count);
                }
            }
            catch (const std::exception & e) {
                row.mt_count.reset();
                row.irr_count.reset();
                row.theta.reset();
                row.tau.reset();
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

auto format_double(double v) -> std::string
{
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

auto write_bench_csv(std::ostream & out, const std::vector<BenchRow> & rows) -> void
{
    out << bench_header << '\n';
    auto opt = [](const auto & o) { return o ? std::to_string(*o) : std::string(); };
    for (const auto & r : rows) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        out << r.id << ',' << r.n << ',' << r.m << ',' << r.backend << ',' << opt(r.mt_count) << ','
            << opt(r.irr_count) << ',' << (r.theta ? format_double(*r.theta) : std::string()) << ',' << opt(r.tau)
            << ',' << ms << '\n';
        if (! r.error.empty())
            out << "# error: " << r.id << ' ' << r.backend << ": " << r.error << '\n';
    }
}

} // namespace ht
