#include "reanno/diff.hpp"

#include <cmath>

namespace reanno {

namespace {

// Pairwise sum of squared differences over [lo, hi).
double sumsq_pairwise(const PixelArray& a, const PixelArray& b, long lo,
                      long hi) {
  if (hi - lo <= 64) {
    double acc = 0.0;
    for (long i = lo; i < hi; ++i) {
      const double d = a[i] - b[i];
      acc += d * d;
    }
    return acc;
  }
  const long mid = lo + (hi - lo) / 2;
  return sumsq_pairwise(a, b, lo, mid) + sumsq_pairwise(a, b, mid, hi);
}

void require_same_shape(const Frame& a, const Frame& b) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch("frame shapes differ: " + std::to_string(a.width) +
                            "x" + std::to_string(a.height) + "x" +
                            std::to_string(a.channels) + " vs " +
                            std::to_string(b.width) + "x" +
                            std::to_string(b.height) + "x" +
                            std::to_string(b.channels));
  }
}

}  // namespace

CurveMode curve_mode_from_string(const std::string& s) {
  if (s == "fixed-onset") return CurveMode::FixedOnset;
  if (s == "fixed-first") return CurveMode::FixedFirst;
  if (s == "consecutive") return CurveMode::Consecutive;
  throw ParseError("unknown curve mode: " + s);
}

std::string to_string(CurveMode mode) {
  switch (mode) {
    case CurveMode::FixedOnset: return "fixed-onset";
    case CurveMode::FixedFirst: return "fixed-first";
    case CurveMode::Consecutive: return "consecutive";
  }
  return "?";
}

double frame_l2(const Frame& a, const Frame& b) {
  require_same_shape(a, b);
  return std::sqrt(sumsq_pairwise(a.pixels, b.pixels, 0, a.pixels.size()));
}

IntensityCurve motion_intensity_curve(const FrameSequence& seq, CurveMode mode,
                                      long ref) {
  const long n = seq.length();
  if (mode == CurveMode::FixedFirst) ref = 0;
  if (mode != CurveMode::Consecutive && (ref < 0 || ref >= n)) {
    throw OutOfRange("curve reference index " + std::to_string(ref) +
                     " outside sequence of length " + std::to_string(n));
  }
  IntensityCurve curve;
  curve.mode = mode;
  curve.reference_index = (mode == CurveMode::Consecutive) ? 0 : ref;
  curve.values.resize(n);
  if (mode == CurveMode::Consecutive) {
    curve.values[0] = 0.0;
    for (long t = 1; t < n; ++t) {
      curve.values[t] = frame_l2(seq.frames[t], seq.frames[t - 1]);
    }
  } else {
    for (long t = 0; t < n; ++t) {
      curve.values[t] = frame_l2(seq.frames[t], seq.frames[ref]);
    }
  }
  return curve;
}

DifferenceFrame difference_frame(const Frame& a, const Frame& b) {
  require_same_shape(a, b);
  DifferenceFrame d;
  d.width = a.width;
  d.height = a.height;
  d.channels = a.channels;
  d.values = a.pixels - b.pixels;
  return d;
}

int difference_to_u8(double v) {
  const double mapped = (v + 255.0) / 2.0;
  // round half away from zero; mapped is nonnegative for in-range inputs
  return static_cast<int>(std::floor(mapped + 0.5));
}

}  // namespace reanno
