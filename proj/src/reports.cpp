#include "reanno/reports.hpp"

#include "reanno/csv.hpp"
#include "reanno/pgm.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace reanno {

void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_reannotation_csv(const fs::path& path,
                            const std::vector<SampleDescriptor>& rows,
                            const std::vector<Reannotation>& results) {
  if (rows.size() != results.size()) {
    throw DimensionMismatch("write_reannotation_csv: row/result count mismatch");
  }
  std::ostringstream out;
  out << kReannotationHeader << "\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& d = rows[i];
    const auto& r = results[i];
    out << csv::join_row(
               {d.sample_id, d.subject_id, d.label, d.group,
                csv::format_real(d.fps), std::to_string(d.index_base),
                std::to_string(r.original.onset + d.index_base),
                std::to_string(r.original.apex + d.index_base),
                std::to_string(r.original.offset + d.index_base),
                d.frame_pattern,
                std::to_string(r.reselected.onset + d.index_base),
                std::to_string(r.reselected.apex + d.index_base),
                std::to_string(r.reselected.offset + d.index_base),
                csv::format_real(r.rise_peak_diff),
                csv::format_real(r.fall_peak_diff),
                r.fall_degenerate ? "1" : "0"})
        << "\n";
  }
  write_file_atomic(path, out.str());
}

std::vector<ReannotationRow> read_reannotation_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto rows = csv::parse(ss.str());
  if (rows.empty() || csv::join_row(rows.front()) != kReannotationHeader) {
    throw ParseError("reannotation file " + path.string() + ": wrong header");
  }
  std::vector<ReannotationRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 16) {
      throw ParseError("reannotation row " + std::to_string(r) +
                       ": expected 16 fields");
    }
    const int base = std::stoi(row[5]);
    ReannotationRow rr;
    rr.sample_id = row[0];
    rr.reselected.onset = std::stol(row[10]) - base;
    rr.reselected.apex = std::stol(row[11]) - base;
    rr.reselected.offset = std::stol(row[12]) - base;
    out.push_back(std::move(rr));
  }
  return out;
}

namespace {

constexpr const char* kDeviationHeader =
    "sample_id,onset_d_frames,onset_d_signed,onset_d_pct,onset_d_ms,"
    "apex_d_frames,apex_d_signed,apex_d_pct,apex_d_ms,"
    "offset_d_frames,offset_d_signed,offset_d_pct,offset_d_ms,"
    "mean_d_pct,mean_d_ms";

json keyframe_json(const KeyframeDeviation& k) {
  return json{{"d_frames", k.d_frames},
              {"d_signed", k.d_signed},
              {"d_pct", k.d_pct},
              {"d_ms", k.d_ms}};
}

}  // namespace

void write_deviation_csv(const fs::path& path,
                         const std::vector<std::string>& sample_ids,
                         const std::vector<DeviationRecord>& records) {
  std::ostringstream out;
  out << kDeviationHeader << "\n";
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::vector<std::string> fields{sample_ids[i]};
    for (const KeyframeDeviation* k : {&r.onset, &r.apex, &r.offset}) {
      fields.push_back(std::to_string(k->d_frames));
      fields.push_back(std::to_string(k->d_signed));
      fields.push_back(csv::format_real(k->d_pct));
      fields.push_back(csv::format_real(k->d_ms));
    }
    fields.push_back(csv::format_real(r.mean_d_pct));
    fields.push_back(csv::format_real(r.mean_d_ms));
    out << csv::join_row(fields) << "\n";
  }
  write_file_atomic(path, out.str());
}

void write_deviation_json(const fs::path& path,
                          const std::vector<std::string>& sample_ids,
                          const std::vector<DeviationRecord>& records) {
  json arr = json::array();
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    arr.push_back(json{{"sample_id", sample_ids[i]},
                       {"onset", keyframe_json(r.onset)},
                       {"apex", keyframe_json(r.apex)},
                       {"offset", keyframe_json(r.offset)},
                       {"mean_d_pct", r.mean_d_pct},
                       {"mean_d_ms", r.mean_d_ms},
                       {"seq_len", r.seq_len},
                       {"fps", r.fps}});
  }
  write_file_atomic(path, arr.dump(2) + "\n");
}

void write_sweep_csv(const fs::path& path, const SweepReport& report) {
  std::ostringstream out;
  out << "group,lambda,mean_d_pct,mean_d_ms,n_samples\n";
  for (const auto& group : report.groups) {
    for (size_t li = 0; li < report.lambdas.size(); ++li) {
      const auto it = report.cells.find({group, li});
      if (it == report.cells.end()) continue;
      out << csv::join_row({group, csv::format_real(report.lambdas[li]),
                            csv::format_real(it->second.mean_d_pct),
                            csv::format_real(it->second.mean_d_ms),
                            std::to_string(it->second.n_samples)})
          << "\n";
    }
  }
  write_file_atomic(path, out.str());
}

void write_sweep_json(const fs::path& path, const SweepReport& report) {
  json arr = json::array();
  for (const auto& group : report.groups) {
    for (size_t li = 0; li < report.lambdas.size(); ++li) {
      const auto it = report.cells.find({group, li});
      if (it == report.cells.end()) continue;
      arr.push_back(json{{"group", group},
                         {"lambda", report.lambdas[li]},
                         {"mean_d_pct", it->second.mean_d_pct},
                         {"mean_d_ms", it->second.mean_d_ms},
                         {"n_samples", it->second.n_samples}});
    }
  }
  write_file_atomic(path, arr.dump(2) + "\n");
}

void write_curve_csv(const fs::path& path, const IntensityCurve& curve) {
  std::ostringstream out;
  out << "frame_index,value\n";
  for (size_t t = 0; t < curve.values.size(); ++t) {
    out << t << "," << csv::format_real(curve.values[t]) << "\n";
  }
  write_file_atomic(path, out.str());
}

void write_difference_csv(const fs::path& path, const DifferenceFrame& diff) {
  std::ostringstream out;
  for (int y = 0; y < diff.height; ++y) {
    for (int x = 0; x < diff.width; ++x) {
      if (x) out << ",";
      out << csv::format_real(diff.values[static_cast<long>(y) * diff.width + x]);
    }
    out << "\n";
  }
  write_file_atomic(path, out.str());
}

void write_difference_pgm(const fs::path& path, const DifferenceFrame& diff) {
  std::vector<unsigned char> bytes(diff.values.size());
  for (long i = 0; i < diff.values.size(); ++i) {
    bytes[i] = static_cast<unsigned char>(difference_to_u8(diff.values[i]));
  }
  write_pgm_bytes(path, diff.width, diff.height, bytes);
}

}  // namespace reanno
