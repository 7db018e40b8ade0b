#pragma once

#include "reanno/types.hpp"

#include <cstdint>
#include <optional>

namespace reanno {

enum class Profile { Smooth, Fluctuating };

Profile profile_from_string(const std::string& s);
std::string to_string(Profile p);

/// A blink-like irrelevant event: a short triangular pulse on a pattern
/// spatially disjoint from the expression deformation.
struct DistractorSpec {
  long center = 0;
  double amplitude = 0.0;
};

struct SyntheticSpec {
  long length = 40;
  int width = 16;
  int height = 16;
  double fps = 100.0;
  Profile profile = Profile::Smooth;
  long gt_onset = 5;
  long gt_apex = 20;
  long gt_offset = 35;
  double peak_amplitude = 80.0;
  double bump_amplitude = 0.0;  // fluctuating only
  long bump_center = 0;         // fluctuating only
  long bump_halfwidth = 2;
  std::optional<DistractorSpec> distractor;
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;

  std::string sample_id = "synthetic";
  std::string subject_id = "s0";
  std::string label = "neutral";
};

struct SyntheticSample {
  FrameSequence sequence;
  Annotation ground_truth;
  // row-major over width*height; true where the expression deformation lives
  std::vector<bool> deformation_mask;
};

/// Generates a sequence frame_t = clamp(B + a(t) D + distractor(t) E + noise)
/// from seeded base, deformation and distractor patterns. Bit-deterministic
/// given the spec. Throws SpecInvalid if the composition could leave [0, 255]
/// before noise.
SyntheticSample generate_sequence(const SyntheticSpec& spec);

/// Piecewise-linear amplitude profile a(t) of the spec, exposed for tests.
double amplitude_at(const SyntheticSpec& spec, long t);

/// Adds signed jitters to an annotation and clamps the result back to a valid
/// onset <= apex <= offset within [0, seq_len).
Annotation perturb_annotation(const Annotation& gt, long j_onset, long j_apex,
                              long j_offset, long seq_len);

/// Counter-based RNG stream: independent, reproducible streams derived from
/// (seed, ordinal), with explicit uniform and Gaussian draws so output does
/// not depend on the standard library's distribution implementations.
class SeededStream {
 public:
  SeededStream(std::uint64_t seed, std::uint64_t ordinal);

  std::uint64_t next_u64();
  double next_double();                       // uniform [0, 1)
  double next_uniform(double lo, double hi);  // uniform [lo, hi)
  double next_gaussian(double sigma);         // Box-Muller, mean 0

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace reanno
