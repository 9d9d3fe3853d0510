#include "netcomm/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "netcomm/errors.hpp"

namespace netcomm {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '%' || c == '#';
  }
  return true;  // blank
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

long parse_integer(const std::string& tok, long line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + tok + "'", line_no);
  return value;
}

double parse_real(const std::string& tok, long line_no) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected numeric value, got '" + tok + "'", line_no);
  }
}

/// Drops self-loops and duplicates (counted), then builds the graph.
LoadResult finalize(int n, std::vector<Edge> raw, LoadReport report) {
  std::vector<Edge> kept;
  kept.reserve(raw.size());
  for (const Edge& e : raw) {
    if (e.src == e.dst)
      ++report.self_loops_dropped;
    else
      kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  auto last = std::unique(kept.begin(), kept.end());
  report.duplicates_dropped = static_cast<std::size_t>(kept.end() - last);
  kept.erase(last, kept.end());
  if (kept.empty()) throw ParseError("input describes an empty graph (no edges)");
  report.edges_kept = kept.size();
  LoadResult result{Digraph(n, kept), std::move(report)};
  result.report.weakly_connected = is_weakly_connected(result.graph);
  return result;
}

}  // namespace

LoadResult load_edge_list(std::istream& in, IndexBase base, HeaderMode header) {
  const long offset = base == IndexBase::one ? 1 : 0;
  std::vector<Edge> raw;
  LoadReport report;
  long max_index = -1;
  long line_no = 0;
  bool header_pending = header == HeaderMode::count_header;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tokens = tokenize(line);
    if (tokens.size() != 2)
      throw ParseError("expected two tokens, got " + std::to_string(tokens.size()), line_no);
    long a = parse_integer(tokens[0], line_no);
    long b = parse_integer(tokens[1], line_no);
    if (header_pending) {
      header_pending = false;
      if (a <= 0 || b < 0) throw ParseError("invalid count header", line_no);
      report.declared_nodes = a;
      continue;
    }
    a -= offset;
    b -= offset;
    if (a < 0 || b < 0)
      throw ParseError("node index below declared base", line_no);
    max_index = std::max({max_index, a, b});
    raw.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  if (raw.empty()) throw ParseError("input describes an empty graph (no edges)");
  long n = max_index + 1;
  if (report.declared_nodes >= 0) {
    if (report.declared_nodes < n)
      throw ParseError("header declares " + std::to_string(report.declared_nodes) +
                       " nodes but an index reaches " + std::to_string(max_index));
    n = report.declared_nodes;
  }
  return finalize(static_cast<int>(n), std::move(raw), report);
}

LoadResult load_matrix_market(std::istream& in) {
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");
  ++line_no;
  {
    auto banner = tokenize(line);
    for (auto& t : banner)
      std::transform(t.begin(), t.end(), t.begin(),
                     [](unsigned char c) { return std::tolower(c); });
    if (banner.size() < 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix")
      throw ParseError("missing %%MatrixMarket banner", line_no);
    const std::string& layout = banner[2];
    const std::string& field = banner[3];
    const std::string& symmetry = banner[4];
    if (layout != "coordinate")
      throw UnsupportedFormatError("unsupported Matrix Market layout '" + layout + "'");
    if (field != "pattern" && field != "real" && field != "integer")
      throw UnsupportedFormatError("unsupported Matrix Market field '" + field + "'");
    if (symmetry != "general" && symmetry != "symmetric")
      throw UnsupportedFormatError("unsupported Matrix Market symmetry '" + symmetry + "'");

    const bool pattern = field == "pattern";
    const bool symmetric = symmetry == "symmetric";

    long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      auto tokens = tokenize(line);
      if (tokens.size() != 3) throw ParseError("expected size line 'rows cols nnz'", line_no);
      rows = parse_integer(tokens[0], line_no);
      cols = parse_integer(tokens[1], line_no);
      nnz = parse_integer(tokens[2], line_no);
      break;
    }
    if (rows < 0) throw ParseError("missing size line");
    if (rows != cols)
      throw UnsupportedFormatError("adjacency matrix must be square, got " +
                                   std::to_string(rows) + "x" + std::to_string(cols));
    LoadReport report;
    report.declared_nodes = rows;
    std::vector<Edge> raw;
    raw.reserve(static_cast<std::size_t>(nnz));
    long seen = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      auto tokens = tokenize(line);
      if (tokens.size() != (pattern ? 2u : 3u))
        throw ParseError("unexpected token count in entry", line_no);
      long i = parse_integer(tokens[0], line_no) - 1;  // format is 1-based
      long j = parse_integer(tokens[1], line_no) - 1;
      if (i < 0 || i >= rows || j < 0 || j >= rows)
        throw ParseError("entry index out of declared bounds", line_no);
      double value = pattern ? 1.0 : parse_real(tokens[2], line_no);
      ++seen;
      if (value == 0.0) continue;  // explicit zero: no edge
      raw.push_back({static_cast<int>(i), static_cast<int>(j)});
      if (symmetric && i != j) raw.push_back({static_cast<int>(j), static_cast<int>(i)});
    }
    if (seen != nnz)
      throw ParseError("entry count " + std::to_string(seen) + " does not match declared " +
                       std::to_string(nnz));
    return finalize(static_cast<int>(rows), std::move(raw), report);
  }
}

LoadResult load_graph_file(const std::string& path, GraphFormat format, IndexBase base,
                           HeaderMode header) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return format == GraphFormat::edge_list ? load_edge_list(in, base, header)
                                          : load_matrix_market(in);
}

}  // namespace netcomm
