#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reanno {

// Base of every error thrown by the library. CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : Error {
  using Error::Error;
};
struct OrderViolation : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InvalidFps : Error {
  using Error::Error;
};
struct EmptyCandidateSet : Error {
  using Error::Error;
};
struct UnknownClass : Error {
  using Error::Error;
};
struct EmptyMatrix : Error {
  using Error::Error;
};
struct SingleSubject : Error {
  using Error::Error;
};
struct SpecInvalid : Error {
  using Error::Error;
};
struct InfeasibleJitter : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct MissingFrames : Error {
  using Error::Error;
};
struct InvalidAnnotation : Error {
  using Error::Error;
};
struct UnsupportedFormat : Error {
  using Error::Error;
};
struct CorruptHeader : Error {
  using Error::Error;
};
struct TruncatedPixels : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

using PixelArray = Eigen::ArrayXd;

/// A single raster frame. Pixels are stored row-major as exact reals promoted
/// from 8-bit sources, so signed differences never wrap.
struct Frame {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 (grayscale) or 3 (RGB)
  PixelArray pixels;

  Frame() = default;
  Frame(int w, int h, int c, PixelArray px);

  long pixel_count() const { return pixels.size(); }
  bool same_shape(const Frame& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }
};

/// Converts an RGB frame to grayscale via luma 0.299R + 0.587G + 0.114B.
/// Grayscale frames pass through unchanged.
Frame to_grayscale(const Frame& f);

struct FrameSequence {
  std::string sample_id;
  std::string subject_id;
  std::optional<std::string> label;
  double fps = 0.0;
  std::vector<Frame> frames;

  FrameSequence() = default;
  FrameSequence(std::string sample, std::string subject, double fps_,
                std::vector<Frame> frames_,
                std::optional<std::string> label_ = std::nullopt);

  long length() const { return static_cast<long>(frames.size()); }
};

/// Onset/apex/offset frame indices, 0-based.
struct Annotation {
  long onset = 0;
  long apex = 0;
  long offset = 0;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Validates 0 <= onset <= apex <= offset < seq_len and returns the
/// annotation unchanged. Idempotent.
Annotation validate_annotation(const Annotation& ann, long seq_len);

/// Selection-range scaling factors for the rise and fall searches.
struct SearchConfig {
  double lambda_rise = 0.1;
  double lambda_fall = 0.1;

  SearchConfig() = default;
  SearchConfig(double rise, double fall);
  static SearchConfig uniform(double lambda) {
    return SearchConfig(lambda, lambda);
  }
};

/// Result of one keyframe re-selection: the original annotation alongside the
/// re-selected one, the peak differences that drove each choice, and the
/// candidate-set sizes actually searched.
struct Reannotation {
  Annotation original;
  Annotation reselected;
  double rise_peak_diff = 0.0;
  double fall_peak_diff = 0.0;
  long rise_candidate_count = 0;
  long fall_candidate_count = 0;
  bool fall_degenerate = false;  // empty fall candidate set, fallback used
};

}  // namespace reanno
