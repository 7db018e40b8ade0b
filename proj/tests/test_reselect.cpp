#include "reanno/reselect.hpp"

#include "helpers.hpp"
#include "reanno/diff.hpp"
#include "reanno/oracle.hpp"
#include "reanno/synth.hpp"

#include <doctest.h>

#include <set>

using namespace reanno;
using namespace reanno::testing;

TEST_CASE("search_radius floors span * lambda") {
  CHECK(search_radius(20, 0.1) == 2);
  CHECK(search_radius(123, 0.0) == 0);
  CHECK(search_radius(7, 0.15) == 1);  // floor(1.05)
  CHECK(search_radius(0, 0.5) == 0);
}

TEST_CASE("rise_candidates degenerate window holds only the original pair") {
  const auto pairs = rise_candidates(Annotation{3, 9, 12}, 0, 100);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<long, long>{3, 9});
}

TEST_CASE("rise_candidates count matches (R+1)(2R+1) away from boundaries") {
  const auto pairs = rise_candidates(Annotation{10, 20, 40}, 2, 100);
  CHECK(pairs.size() == 15);  // 3 * 5
  // original pair included, deterministic ascending order
  std::set<std::pair<long, long>> unique(pairs.begin(), pairs.end());
  CHECK(unique.size() == pairs.size());
  CHECK(unique.count({10, 20}) == 1);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
}

TEST_CASE("rise_candidates clipping and o < a filter shrink the set") {
  const auto pairs = rise_candidates(Annotation{0, 1, 5}, 2, 100);
  // brute-force the expected set under the stated constraints
  std::set<std::pair<long, long>> expect;
  for (long o = 0; o <= 2; ++o) {
    for (long a = -1; a <= 3; ++a) {
      if (a < 0 || a >= 100) continue;
      if (o < a) expect.insert({o, a});
    }
  }
  CHECK(std::set<std::pair<long, long>>(pairs.begin(), pairs.end()) == expect);
  CHECK(pairs.size() < 15);
}

namespace {

FrameSequence constant_sequence(long len) {
  std::vector<Frame> frames(len, constant_frame(4, 4, 100.0));
  return FrameSequence("const", "s0", 100.0, std::move(frames));
}

}  // namespace

TEST_CASE("lambda 0 reselects the original annotation") {
  SeededStream rng(21, 0);
  const FrameSequence seq = random_sequence(20, 4, 4, rng);
  const Annotation ann{2, 9, 16};
  const Reannotation re = reselect(seq, ann, SearchConfig::uniform(0.0));
  CHECK(re.reselected == ann);
  CHECK(re.rise_candidate_count == 1);
}

TEST_CASE("constant sequence keeps the original annotation via tie-breaking") {
  const FrameSequence seq = constant_sequence(30);
  const Annotation ann{3, 12, 25};
  const Reannotation re = reselect(seq, ann, SearchConfig::uniform(0.25));
  CHECK(re.reselected == ann);
  CHECK(re.rise_peak_diff == 0.0);
  CHECK(re.fall_peak_diff == 0.0);
}

TEST_CASE("noiseless synthetic apex is recovered from a perturbed annotation") {
  SyntheticSpec spec;
  spec.length = 40;
  spec.gt_onset = 5;
  spec.gt_apex = 20;
  spec.gt_offset = 35;
  spec.noise_sigma = 0.0;
  const auto sample = generate_sequence(spec);
  const Annotation perturbed =
      perturb_annotation(sample.ground_truth, 0, -2, 0, spec.length);
  REQUIRE(perturbed.apex == 18);
  // span 13, lambda 0.2 -> R = 2, window reaches back to the true apex
  const Reannotation re =
      reselect(sample.sequence, perturbed, SearchConfig::uniform(0.2));
  CHECK(re.reselected.apex == spec.gt_apex);
  CHECK(re.reselected.onset == spec.gt_onset);
}

TEST_CASE("fall search finds the frame most different from the apex") {
  // sequence decaying back to neutral after the annotated offset
  SyntheticSpec spec;
  spec.length = 50;
  spec.gt_onset = 5;
  spec.gt_apex = 20;
  spec.gt_offset = 40;
  spec.noise_sigma = 0.0;
  const auto sample = generate_sequence(spec);
  // annotate the offset early, mid-decay; R_fall must span the true offset
  Annotation early = sample.ground_truth;
  early.offset = 35;
  const Reannotation re =
      reselect(sample.sequence, early, SearchConfig::uniform(0.4));
  // R_fall = floor(15 * 0.4) = 6, window [35, 41] includes frame 40 (calm)
  CHECK(re.reselected.offset >= 40);
}

TEST_CASE("degenerate fall candidate set falls back to the original offset") {
  SeededStream rng(33, 0);
  const FrameSequence seq = random_sequence(10, 4, 4, rng);
  const Annotation ann{2, 9, 9};  // apex = offset = last frame
  const Reannotation re = reselect(seq, ann, SearchConfig::uniform(0.0));
  CHECK(re.reselected.offset == 9);
  CHECK(re.fall_degenerate);
}

TEST_CASE("coincident onset and apex behaves as identity") {
  SeededStream rng(35, 0);
  const FrameSequence seq = random_sequence(12, 4, 4, rng);
  const Annotation ann{4, 4, 10};
  const Reannotation re = reselect(seq, ann, SearchConfig::uniform(0.25));
  CHECK(re.reselected.onset == 4);
  CHECK(re.reselected.apex == 4);
  CHECK(re.rise_candidate_count == 1);
}

TEST_CASE("window containment holds on random instances") {
  SeededStream rng(40, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const long len = 15 + static_cast<long>(rng.next_u64() % 15);
    const FrameSequence seq = random_sequence(len, 5, 5, rng);
    const long onset = static_cast<long>(rng.next_u64() % (len / 3));
    const long apex = onset + 1 + static_cast<long>(rng.next_u64() % (len / 3));
    const long offset = apex + static_cast<long>(rng.next_u64() %
                                                 (len - apex));
    const Annotation ann{onset, apex, offset};
    const double lambda = 0.05 + 0.05 * static_cast<double>(rng.next_u64() % 5);
    const Reannotation re = reselect(seq, ann, SearchConfig::uniform(lambda));
    const long r_rise = search_radius(apex - onset, lambda);
    const long r_fall = search_radius(offset - apex, lambda);
    CHECK(re.reselected.onset >= onset);
    CHECK(re.reselected.onset <= onset + r_rise);
    CHECK(re.reselected.apex >= apex - r_rise);
    CHECK(re.reselected.apex <= apex + r_rise);
    if (!re.fall_degenerate) {
      CHECK(re.reselected.offset >= offset);
      CHECK(re.reselected.offset <= offset + r_fall);
    }
  }
}

TEST_CASE("selected indices are invariant under affine pixel rescaling") {
  SeededStream rng(44, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const FrameSequence seq = random_sequence(20, 5, 5, rng);
    FrameSequence scaled = seq;
    for (Frame& f : scaled.frames) {
      f = Frame(f.width, f.height, 1, f.pixels * 0.5 + 40.0);
    }
    const Annotation ann{2, 10, 17};
    const SearchConfig cfg = SearchConfig::uniform(0.2);
    const Reannotation a = reselect(seq, ann, cfg);
    const Reannotation b = reselect(scaled, ann, cfg);
    CHECK(a.reselected == b.reselected);
  }
}

TEST_CASE("a large distractor inside a wide window captures the selection") {
  SyntheticSpec spec;
  spec.length = 60;
  spec.gt_onset = 10;
  spec.gt_apex = 30;
  spec.gt_offset = 50;
  spec.peak_amplitude = 60.0;
  spec.noise_sigma = 0.0;
  spec.distractor = DistractorSpec{34, 130.0};  // blink-like, inside apex+5
  const auto sample = generate_sequence(spec);

  // narrow window excludes the blink
  const Reannotation narrow = reselect(sample.sequence, sample.ground_truth,
                                       SearchConfig::uniform(0.05));
  CHECK(narrow.reselected.apex == spec.gt_apex);

  // wide window reaches the blink and locks onto it
  const Reannotation wide = reselect(sample.sequence, sample.ground_truth,
                                     SearchConfig::uniform(0.25));
  CHECK(wide.reselected.apex == 34);
}
