#include "netcomm/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "netcomm/errors.hpp"

namespace netcomm {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_rows(std::ostream& out, const ModificationTrajectory& traj,
                           const std::string& method_prefix) {
  for (const TrajectoryStep& s : traj.steps) {
    const Edge e = s.edges.empty() ? Edge{-1, -1} : s.edges.front();
    const double m = static_cast<double>(s.edge_count);
    out << method_prefix << s.step << ',' << e.src << ',' << e.dst << ',' << fmt(s.thc)
        << ',' << fmt(s.tac) << ',';
    if (!std::isnan(s.tc)) out << fmt(s.tc);
    out << ',' << fmt(m > 0 ? s.thc / m : s.thc) << ',' << fmt(m > 0 ? s.tac / m : s.tac)
        << ',' << fmt(s.elapsed_seconds) << '\n';
  }
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double field_to_double(const std::string& f, long line_no) {
  if (f.empty()) return std::numeric_limits<double>::quiet_NaN();
  try {
    return std::stod(f);
  } catch (const std::exception&) {
    throw ParseError("bad numeric field '" + f + "'", line_no);
  }
}

TrajectoryCsvRow parse_trajectory_fields(const std::vector<std::string>& f,
                                         std::size_t offset, long line_no) {
  TrajectoryCsvRow row;
  row.step = static_cast<int>(field_to_double(f[offset + 0], line_no));
  row.edge_src = static_cast<int>(field_to_double(f[offset + 1], line_no));
  row.edge_dst = static_cast<int>(field_to_double(f[offset + 2], line_no));
  row.thc = field_to_double(f[offset + 3], line_no);
  row.tac = field_to_double(f[offset + 4], line_no);
  row.tc = field_to_double(f[offset + 5], line_no);
  row.thc_per_edge = field_to_double(f[offset + 6], line_no);
  row.tac_per_edge = field_to_double(f[offset + 7], line_no);
  row.elapsed_s = field_to_double(f[offset + 8], line_no);
  return row;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const ModificationTrajectory& traj) {
  out << "step,edge_src,edge_dst,thc,tac,tc,thc_per_edge,tac_per_edge,elapsed_s\n";
  write_trajectory_rows(out, traj, "");
}

std::vector<TrajectoryCsvRow> read_trajectory_csv(std::istream& in) {
  std::vector<TrajectoryCsvRow> rows;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("step,", 0) != 0) throw ParseError("missing trajectory header", line_no);
      continue;
    }
    auto f = split_fields(line);
    if (f.size() != 9) throw ParseError("expected 9 fields", line_no);
    rows.push_back(parse_trajectory_fields(f, 0, line_no));
  }
  if (!header_seen) throw ParseError("empty trajectory CSV");
  return rows;
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
  out << "method,step,edge_src,edge_dst,thc,tac,tc,thc_per_edge,tac_per_edge,elapsed_s\n";
  for (const MethodRun& run : table.runs) {
    if (!run.trajectory) continue;
    write_trajectory_rows(out, *run.trajectory, run.trajectory->label + ",");
  }
}

std::vector<ComparisonCsvRow> read_comparison_csv(std::istream& in) {
  std::vector<ComparisonCsvRow> rows;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("method,", 0) != 0) throw ParseError("missing comparison header", line_no);
      continue;
    }
    auto f = split_fields(line);
    if (f.size() != 10) throw ParseError("expected 10 fields", line_no);
    rows.push_back({f[0], parse_trajectory_fields(f, 1, line_no)});
  }
  if (!header_seen) throw ParseError("empty comparison CSV");
  return rows;
}

void write_timings_csv(std::ostream& out, const ComparisonTable& table) {
  out << "method,kind,steps,scoring_passes,select_apply_s,status\n";
  const char* kind = table.kind == ModificationKind::update ? "update" : "downdate";
  for (const MethodRun& run : table.runs) {
    if (run.trajectory) {
      out << run.trajectory->label << ',' << kind << ',' << table.steps << ','
          << run.trajectory->scoring_passes << ',' << fmt(run.trajectory->selection_seconds)
          << ",ok" << (run.trajectory->truncated ? " (truncated)" : "") << '\n';
    } else {
      std::string reason = run.error;
      for (char& c : reason)
        if (c == ',' || c == '\n') c = ';';
      out << run.method.label() << ',' << kind << ',' << table.steps << ",0,,skipped: "
          << reason << '\n';
    }
  }
}

std::vector<TimingCsvRow> read_timings_csv(std::istream& in) {
  std::vector<TimingCsvRow> rows;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("method,", 0) != 0) throw ParseError("missing timings header", line_no);
      continue;
    }
    auto f = split_fields(line);
    if (f.size() != 6) throw ParseError("expected 6 fields", line_no);
    TimingCsvRow row;
    row.method = f[0];
    row.kind = f[1];
    row.steps = static_cast<int>(field_to_double(f[2], line_no));
    row.scoring_passes = static_cast<int>(field_to_double(f[3], line_no));
    row.select_apply_s = field_to_double(f[4], line_no);
    row.status = f[5];
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("empty timings CSV");
  return rows;
}

void write_scores_csv(std::ostream& out, const EdgeScoreTable& table) {
  out << "edge_src,edge_dst,method,score\n";
  const std::string label = table.method.label();
  for (const auto& [edge, score] : table.entries)
    out << edge.src << ',' << edge.dst << ',' << label << ',' << fmt(score) << '\n';
}

std::vector<ScoreCsvRow> read_scores_csv(std::istream& in) {
  std::vector<ScoreCsvRow> rows;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("edge_src,", 0) != 0) throw ParseError("missing scores header", line_no);
      continue;
    }
    auto f = split_fields(line);
    if (f.size() != 4) throw ParseError("expected 4 fields", line_no);
    ScoreCsvRow row;
    row.edge.src = static_cast<int>(field_to_double(f[0], line_no));
    row.edge.dst = static_cast<int>(field_to_double(f[1], line_no));
    row.method = f[2];
    row.score = field_to_double(f[3], line_no);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("empty scores CSV");
  return rows;
}

}  // namespace netcomm
