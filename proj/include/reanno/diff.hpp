#pragma once

#include "reanno/types.hpp"

namespace reanno {

enum class CurveMode { FixedOnset, FixedFirst, Consecutive };

CurveMode curve_mode_from_string(const std::string& s);
std::string to_string(CurveMode mode);

/// Per-frame scalar motion-intensity values against a reference.
struct IntensityCurve {
  std::vector<double> values;
  CurveMode mode = CurveMode::FixedOnset;
  long reference_index = 0;  // meaningful for fixed modes
};

/// Signed pixel-wise difference of two frames; values in [-255, 255].
struct DifferenceFrame {
  int width = 0;
  int height = 0;
  int channels = 1;
  PixelArray values;
};

/// Euclidean norm of the pixel-wise difference between two frames.
/// Squared terms are accumulated with pairwise summation in a fixed order, so
/// the result is deterministic regardless of caller-side parallelism.
double frame_l2(const Frame& a, const Frame& b);

/// Intensity curve for a whole sequence. Fixed modes diff every frame against
/// frames[ref] (FixedFirst forces ref = 0); Consecutive diffs against the
/// previous frame with value[0] = 0.
IntensityCurve motion_intensity_curve(const FrameSequence& seq, CurveMode mode,
                                      long ref = 0);

DifferenceFrame difference_frame(const Frame& a, const Frame& b);

/// Maps a signed difference value into 8-bit for PGM export:
/// v -> round((v + 255) / 2), half away from zero.
int difference_to_u8(double v);

}  // namespace reanno
