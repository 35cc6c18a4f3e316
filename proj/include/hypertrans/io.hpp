#ifndef HYPERTRANS_IO_HPP
#define HYPERTRANS_IO_HPP

#include <hypertrans/hypergraph.hpp>
#include <hypertrans/vertex_set.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ht {

/**
 * Reads the ".dat" format: one edge per line, whitespace-separated decimal
 * labels. Lines whose first non-blank character is '#' and blank lines are
 * skipped. Throws ParseError (with line number) on a bad token or when the
 * input holds no edge at all.
 */
auto parse_hypergraph(std::istream & in) -> Hypergraph;
auto parse_hypergraph(std::string_view text) -> Hypergraph;

/// Canonical ".dat" output: edges in stored order, ascending labels, single
/// spaces, LF-terminated lines.
auto serialize_hypergraph(const Hypergraph & h) -> std::string;

/// Reads a family of vertex sets in the same line format (used for MT files).
/// Blank and comment lines are skipped; the family may be empty.
auto parse_vertex_sets(std::istream & in) -> std::vector<VertexSet>;

/// One set per line, ascending labels, in the family's canonical order.
auto write_mts(std::ostream & out, const MtSet & mts) -> void;

} // namespace ht

#endif
