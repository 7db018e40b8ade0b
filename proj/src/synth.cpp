#include "reanno/synth.hpp"

#include <algorithm>
#include <cmath>

namespace reanno {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t ordinal) {
  std::uint64_t mix = seed;
  splitmix64(mix);
  state_ = mix ^ (ordinal * 0xD1342543DE82EF95ULL);
}

std::uint64_t SeededStream::next_u64() { return splitmix64(state_); }

double SeededStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededStream::next_uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

double SeededStream::next_gaussian(double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return spare_ * sigma;
  }
  double u1 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta) * sigma;
}

Profile profile_from_string(const std::string& s) {
  if (s == "smooth") return Profile::Smooth;
  if (s == "fluctuating") return Profile::Fluctuating;
  throw ParseError("unknown profile: " + s);
}

std::string to_string(Profile p) {
  return p == Profile::Smooth ? "smooth" : "fluctuating";
}

double amplitude_at(const SyntheticSpec& spec, long t) {
  double a = 0.0;
  if (t <= spec.gt_onset || t > spec.gt_offset) {
    a = 0.0;
  } else if (t <= spec.gt_apex) {
    a = spec.peak_amplitude * static_cast<double>(t - spec.gt_onset) /
        static_cast<double>(spec.gt_apex - spec.gt_onset);
  } else {
    a = spec.peak_amplitude * static_cast<double>(spec.gt_offset - t) /
        static_cast<double>(spec.gt_offset - spec.gt_apex);
  }
  if (spec.profile == Profile::Fluctuating && spec.bump_amplitude > 0.0) {
    const double w = static_cast<double>(std::max<long>(1, spec.bump_halfwidth));
    const double frac = 1.0 - std::abs(static_cast<double>(t - spec.bump_center)) / w;
    if (frac > 0.0) a += spec.bump_amplitude * frac;
  }
  return a;
}

namespace {

double distractor_at(const SyntheticSpec& spec, long t) {
  if (!spec.distractor || spec.distractor->amplitude <= 0.0) return 0.0;
  const double frac =
      1.0 - std::abs(static_cast<double>(t - spec.distractor->center)) / 2.0;
  return frac > 0.0 ? spec.distractor->amplitude * frac : 0.0;
}

void validate_spec(const SyntheticSpec& spec) {
  if (spec.length < 2 || spec.width < 4 || spec.height < 4) {
    throw SpecInvalid("synthetic spec: length >= 2 and dims >= 4 required");
  }
  if (!(spec.gt_onset >= 0 && spec.gt_onset < spec.gt_apex &&
        spec.gt_apex < spec.gt_offset && spec.gt_offset < spec.length)) {
    throw SpecInvalid("synthetic spec: need 0 <= onset < apex < offset < length");
  }
  if (spec.fps <= 0.0) throw SpecInvalid("synthetic spec: fps must be > 0");
  if (spec.peak_amplitude <= 0.0 || spec.peak_amplitude > 255.0) {
    throw SpecInvalid("synthetic spec: peak_amplitude must be in (0, 255]");
  }
  if (spec.noise_sigma < 0.0) {
    throw SpecInvalid("synthetic spec: noise_sigma must be >= 0");
  }
}

}  // namespace

SyntheticSample generate_sequence(const SyntheticSpec& spec) {
  validate_spec(spec);
  const long n_px = static_cast<long>(spec.width) * spec.height;

  // Deformation block: ~10% of pixels (0.32 * 0.32), offset from the corner.
  const int dw = std::max(1, static_cast<int>(std::lround(spec.width * 0.32)));
  const int dh = std::max(1, static_cast<int>(std::lround(spec.height * 0.32)));
  const int dx0 = spec.width / 8;
  const int dy0 = spec.height / 8;
  // Distractor block sits in the opposite corner, disjoint from the above.
  const int ex0 = spec.width - dw;
  const int ey0 = spec.height - dh;

  SeededStream rng(spec.seed, 0);
  PixelArray base(n_px), deform(n_px), distract(n_px);
  std::vector<bool> mask(n_px, false);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const long p = static_cast<long>(y) * spec.width + x;
      base[p] = rng.next_uniform(20.0, 120.0);
      const bool in_deform = x >= dx0 && x < dx0 + dw && y >= dy0 && y < dy0 + dh;
      const bool in_distract = x >= ex0 && y >= ey0;
      deform[p] = in_deform ? rng.next_uniform(0.5, 1.0) : 0.0;
      distract[p] = in_distract ? rng.next_uniform(0.5, 1.0) : 0.0;
      mask[p] = in_deform;
    }
  }

  double a_max = 0.0;
  double e_max = 0.0;
  for (long t = 0; t < spec.length; ++t) {
    a_max = std::max(a_max, amplitude_at(spec, t));
    e_max = std::max(e_max, distractor_at(spec, t));
  }
  const PixelArray peak_frame = base + a_max * deform + e_max * distract;
  if (peak_frame.maxCoeff() > 255.0) {
    throw SpecInvalid("synthetic spec: amplitudes overflow pixel range");
  }

  SeededStream noise_rng(spec.seed, 1);
  std::vector<Frame> frames;
  frames.reserve(spec.length);
  for (long t = 0; t < spec.length; ++t) {
    PixelArray px =
        base + amplitude_at(spec, t) * deform + distractor_at(spec, t) * distract;
    if (spec.noise_sigma > 0.0) {
      for (long p = 0; p < n_px; ++p) {
        px[p] += noise_rng.next_gaussian(spec.noise_sigma);
      }
      px = px.cwiseMax(0.0).cwiseMin(255.0);
    }
    frames.emplace_back(spec.width, spec.height, 1, std::move(px));
  }

  SyntheticSample sample;
  sample.sequence = FrameSequence(spec.sample_id, spec.subject_id, spec.fps,
                                  std::move(frames), spec.label);
  sample.ground_truth = Annotation{spec.gt_onset, spec.gt_apex, spec.gt_offset};
  sample.deformation_mask = std::move(mask);
  return sample;
}

Annotation perturb_annotation(const Annotation& gt, long j_onset, long j_apex,
                              long j_offset, long seq_len) {
  if (seq_len < 1) throw InfeasibleJitter("perturb_annotation: empty sequence");
  Annotation ann;
  ann.onset = std::clamp(gt.onset + j_onset, 0L, seq_len - 1);
  ann.apex = std::clamp(gt.apex + j_apex, ann.onset, seq_len - 1);
  ann.offset = std::clamp(gt.offset + j_offset, ann.apex, seq_len - 1);
  return validate_annotation(ann, seq_len);
}

}  // namespace reanno
