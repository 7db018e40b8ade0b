#pragma once

#include "reanno/deviation.hpp"
#include "reanno/diff.hpp"
#include "reanno/manifest.hpp"
#include "reanno/types.hpp"

#include <filesystem>

namespace reanno {

/// Writes content to path atomically (temp file + rename).
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

inline constexpr const char* kReannotationHeader =
    "sample_id,subject_id,label,group,fps,index_base,onset,apex,offset,"
    "frame_pattern,onset_re,apex_re,offset_re,rise_peak_diff,fall_peak_diff,"
    "degenerate_flag";

/// Re-annotation results in manifest row order. Indices are emitted in each
/// row's declared index base.
void write_reannotation_csv(const std::filesystem::path& path,
                            const std::vector<SampleDescriptor>& rows,
                            const std::vector<Reannotation>& results);

/// Reads back a reannotation CSV; returns (descriptor-like row, reselected
/// annotation normalized to 0-based) pairs keyed by sample_id order.
struct ReannotationRow {
  std::string sample_id;
  Annotation reselected;  // 0-based
};
std::vector<ReannotationRow> read_reannotation_csv(
    const std::filesystem::path& path);

void write_deviation_csv(const std::filesystem::path& path,
                         const std::vector<std::string>& sample_ids,
                         const std::vector<DeviationRecord>& records);
void write_deviation_json(const std::filesystem::path& path,
                          const std::vector<std::string>& sample_ids,
                          const std::vector<DeviationRecord>& records);

void write_sweep_csv(const std::filesystem::path& path,
                     const SweepReport& report);
void write_sweep_json(const std::filesystem::path& path,
                      const SweepReport& report);

void write_curve_csv(const std::filesystem::path& path,
                     const IntensityCurve& curve);

/// Numeric CSV grid of a difference frame (height rows, width columns).
void write_difference_csv(const std::filesystem::path& path,
                          const DifferenceFrame& diff);
/// 8-bit PGM view of a difference frame via v -> round((v + 255) / 2).
void write_difference_pgm(const std::filesystem::path& path,
                          const DifferenceFrame& diff);

}  // namespace reanno
