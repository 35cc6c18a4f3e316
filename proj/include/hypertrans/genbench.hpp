#ifndef HYPERTRANS_GENBENCH_HPP
#define HYPERTRANS_GENBENCH_HPP

#include <hypertrans/hypergraph.hpp>
#include <hypertrans/mt_enum.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ht {

/// Enumeration route selectable from the command line and the bench.
enum class Algorithm
{
    berge,
    mtminer,
    mmcs,
    local
};

auto algorithm_name(Algorithm a) -> std::string_view;
auto parse_algorithm(std::string_view name) -> std::optional<Algorithm>;

/// local runs mmcs on each part.
auto enumerate_with(const Hypergraph & h, Algorithm a) -> MtSet;

struct RandomSpec
{
    std::size_t n = 0;
    std::size_t m = 0;
    double p_l = 0.0;
    double p_u = 0.0;
    std::uint64_t seed = 1;
};

inline constexpr std::string_view rng_name = "mt19937_64";

/// Each edge draws p uniformly in [p_l, p_u] and takes each of the vertices
/// 1..n with probability p; an empty draw is redone with a fresh p. Not
/// min-reduced. Throws DomainError on an invalid spec.
auto gen_random(const RandomSpec & spec) -> Hypergraph;

/// m disjoint edges of `block` consecutive labels starting at 1.
auto gen_worst_case(std::size_t m, std::size_t block) -> Hypergraph;

struct BenchInstance
{
    std::string id;
    Hypergraph h;
};

struct BenchRow
{
    std::string id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string backend;
    std::optional<std::uint64_t> mt_count;
    std::optional<std::uint64_t> irr_count;
    std::optional<double> theta;
    std::optional<std::size_t> tau;
    double ms = 0.0;
    std::string error;
};

inline constexpr std::string_view bench_header = "id,n,m,backend,mt_count,irr_count,theta,tau,ms";

/// One row per (instance, algorithm). Instances are min-reduced first. The
/// timed enumeration runs once as warm-up, then once measured. with_irr adds
/// the irredundant count and theta. A failure leaves the counts empty and
/// fills `error`.
auto bench_run(const std::vector<BenchInstance> & instances, const std::vector<Algorithm> & algorithms, bool with_irr)
        -> std::vector<BenchRow>;

/// Header, then one line per row; a failed row is followed by "# error: ...".
auto write_bench_csv(std::ostream & out, const std::vector<BenchRow> & rows) -> void;

/// Shortest decimal form that reads back to the same double.
auto format_double(double v) -> std::string;

} // namespace ht

#endif
