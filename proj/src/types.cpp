#include "reanno/types.hpp"

#include <utility>

namespace reanno {

Frame::Frame(int w, int h, int c, PixelArray px)
    : width(w), height(h), channels(c), pixels(std::move(px)) {
  if (channels != 1 && channels != 3) {
    throw DimensionMismatch("Frame: channels must be 1 or 3, got " +
                            std::to_string(channels));
  }
  if (pixels.size() != static_cast<long>(width) * height * channels) {
    throw DimensionMismatch(
        "Frame: pixel count " + std::to_string(pixels.size()) +
        " does not match " + std::to_string(width) + "x" +
        std::to_string(height) + "x" + std::to_string(channels));
  }
  if (pixels.size() > 0 && (pixels.minCoeff() < 0.0 || pixels.maxCoeff() > 255.0)) {
    throw OutOfRange("Frame: intensity outside [0, 255]");
  }
}

Frame to_grayscale(const Frame& f) {
  if (f.channels == 1) return f;
  const long n = static_cast<long>(f.width) * f.height;
  PixelArray gray(n);
  for (long p = 0; p < n; ++p) {
    const double r = f.pixels[3 * p];
    const double g = f.pixels[3 * p + 1];
    const double b = f.pixels[3 * p + 2];
    gray[p] = 0.299 * r + 0.587 * g + 0.114 * b;
  }
  return Frame(f.width, f.height, 1, std::move(gray));
}

FrameSequence::FrameSequence(std::string sample, std::string subject,
                             double fps_, std::vector<Frame> frames_,
                             std::optional<std::string> label_)
    : sample_id(std::move(sample)),
      subject_id(std::move(subject)),
      label(std::move(label_)),
      fps(fps_),
      frames(std::move(frames_)) {
  if (fps <= 0.0) throw InvalidFps("FrameSequence: fps must be > 0");
  if (frames.size() < 2) {
    throw DimensionMismatch("FrameSequence: length must be >= 2");
  }
  for (const Frame& f : frames) {
    if (!f.same_shape(frames.front())) {
      throw DimensionMismatch("FrameSequence: frames differ in shape");
    }
  }
}

Annotation validate_annotation(const Annotation& ann, long seq_len) {
  if (ann.onset < 0 || ann.offset >= seq_len) {
    throw OutOfRange("annotation index outside [0, " +
                     std::to_string(seq_len) + "): onset=" +
                     std::to_string(ann.onset) + " offset=" +
                     std::to_string(ann.offset));
  }
  if (ann.onset > ann.apex || ann.apex > ann.offset) {
    throw OrderViolation("annotation must satisfy onset <= apex <= offset");
  }
  return ann;
}

SearchConfig::SearchConfig(double rise, double fall)
    : lambda_rise(rise), lambda_fall(fall) {
  if (rise < 0.0 || rise > 1.0 || fall < 0.0 || fall > 1.0) {
    throw OutOfRange("SearchConfig: lambda must be in [0, 1]");
  }
}

}  // namespace reanno
