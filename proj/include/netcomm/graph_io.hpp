#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "netcomm/digraph.hpp"

namespace netcomm {

enum class IndexBase { zero, one };

/// Whether the first non-comment line of an edge list is an "n m" count
/// header. Not auto-detected: a bare "n m" line is indistinguishable from an
/// edge, so the caller declares it.
enum class HeaderMode { none, count_header };

struct LoadReport {
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t edges_kept = 0;
  bool weakly_connected = false;
  /// Node count from a header / Matrix Market banner, -1 when absent.
  long declared_nodes = -1;
};

struct LoadResult {
  Digraph graph;
  LoadReport report;
};

/// Edge list: two integer tokens per line, '%'/'#' comments, optional
/// "n m" first line (see HeaderMode). Duplicates are collapsed and
/// self-loops dropped, both counted in the report. Node count is
/// max index + 1 unless the header declares more.
LoadResult load_edge_list(std::istream& in, IndexBase base,
                          HeaderMode header = HeaderMode::none);

/// Matrix Market coordinate format, pattern/real/integer field,
/// general/symmetric symmetry. Any entry with nonzero value becomes an
/// edge; symmetric storage expands to both directions; self-loops dropped.
LoadResult load_matrix_market(std::istream& in);

enum class GraphFormat { edge_list, matrix_market };

/// Opens and parses `path`; `base`/`header` apply to edge lists only.
LoadResult load_graph_file(const std::string& path, GraphFormat format,
                           IndexBase base = IndexBase::zero,
                           HeaderMode header = HeaderMode::none);

}  // namespace netcomm
