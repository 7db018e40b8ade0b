#pragma once

#include "reanno/synth.hpp"
#include "reanno/types.hpp"

#include <vector>

namespace reanno::testing {

inline Frame make_frame(int w, int h, std::vector<double> vals) {
  PixelArray px(static_cast<long>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) px[static_cast<long>(i)] = vals[i];
  return Frame(w, h, 1, std::move(px));
}

inline Frame constant_frame(int w, int h, double v) {
  return Frame(w, h, 1, PixelArray::Constant(static_cast<long>(w) * h, v));
}

inline Frame random_frame(int w, int h, SeededStream& rng) {
  PixelArray px(static_cast<long>(w) * h);
  for (long i = 0; i < px.size(); ++i) px[i] = rng.next_uniform(0.0, 255.0);
  return Frame(w, h, 1, std::move(px));
}

inline FrameSequence random_sequence(long len, int w, int h,
                                     SeededStream& rng) {
  std::vector<Frame> frames;
  frames.reserve(len);
  for (long t = 0; t < len; ++t) frames.push_back(random_frame(w, h, rng));
  return FrameSequence("rand", "s0", 100.0, std::move(frames));
}

}  // namespace reanno::testing
