#include "reanno/diff.hpp"

#include "helpers.hpp"
#include "reanno/synth.hpp"

#include <doctest.h>

#include <cmath>

using namespace reanno;
using namespace reanno::testing;

TEST_CASE("frame_l2 on identical frames is zero") {
  const Frame f = constant_frame(4, 4, 42.0);
  CHECK(frame_l2(f, f) == 0.0);
}

TEST_CASE("frame_l2 direct evaluation on a 1x2 pair") {
  const Frame a = make_frame(2, 1, {10, 20});
  const Frame b = make_frame(2, 1, {13, 24});
  CHECK(frame_l2(a, b) == doctest::Approx(5.0));
}

TEST_CASE("frame_l2 is homogeneous under pixel scaling") {
  const Frame a = make_frame(2, 1, {10, 20});
  const Frame b = make_frame(2, 1, {13, 24});
  const Frame a2 = make_frame(2, 1, {20, 40});
  const Frame b2 = make_frame(2, 1, {26, 48});
  CHECK(frame_l2(a2, b2) == doctest::Approx(2.0 * frame_l2(a, b)));
}

TEST_CASE("frame_l2 rejects shape mismatches") {
  CHECK_THROWS_AS(frame_l2(constant_frame(2, 2, 0), constant_frame(2, 3, 0)),
                  DimensionMismatch);
}

TEST_CASE("frame_l2 symmetry and triangle inequality on random triples") {
  SeededStream rng(7, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame a = random_frame(6, 6, rng);
    const Frame b = random_frame(6, 6, rng);
    const Frame c = random_frame(6, 6, rng);
    const double ab = frame_l2(a, b);
    const double ba = frame_l2(b, a);
    CHECK(ab == ba);
    CHECK(frame_l2(a, c) <= ab + frame_l2(b, c) + 1e-9);
  }
}

TEST_CASE("frame_l2 is invariant under a common constant shift") {
  SeededStream rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    // integer-valued pixels so the shifted differences are bit-identical
    PixelArray a_px(25), b_px(25);
    for (long i = 0; i < 25; ++i) {
      a_px[i] = static_cast<double>(rng.next_u64() % 200);
      b_px[i] = static_cast<double>(rng.next_u64() % 200);
    }
    const Frame a(5, 5, 1, a_px);
    const Frame b(5, 5, 1, b_px);
    const Frame a_shift(5, 5, 1, a_px + 55.0);
    const Frame b_shift(5, 5, 1, b_px + 55.0);
    CHECK(frame_l2(a_shift, b_shift) == frame_l2(a, b));
  }
}

TEST_CASE("difference_frame basics") {
  const Frame z = constant_frame(3, 3, 0.0);
  const Frame full = constant_frame(3, 3, 255.0);

  SUBCASE("a = b gives all zeros") {
    CHECK((difference_frame(full, full).values == 0.0).all());
  }
  SUBCASE("extreme bound") {
    CHECK((difference_frame(full, z).values == 255.0).all());
  }
  SUBCASE("antisymmetry") {
    SeededStream rng(3, 0);
    const Frame a = random_frame(4, 4, rng);
    const Frame b = random_frame(4, 4, rng);
    const auto ab = difference_frame(a, b);
    const auto ba = difference_frame(b, a);
    CHECK(((ab.values + ba.values).abs() == 0.0).all());
  }
}

TEST_CASE("sum of squared difference-frame values equals frame_l2 squared") {
  SeededStream rng(5, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Frame a = random_frame(7, 7, rng);
    const Frame b = random_frame(7, 7, rng);
    const double l2 = frame_l2(a, b);
    const double sumsq = difference_frame(a, b).values.square().sum();
    CHECK(sumsq == doctest::Approx(l2 * l2).epsilon(1e-9));
  }
}

TEST_CASE("difference frame of a noiseless synthetic rise localizes to the mask") {
  SyntheticSpec spec;
  spec.noise_sigma = 0.0;
  const SyntheticSample sample = generate_sequence(spec);
  const auto& seq = sample.sequence;
  const auto rise = difference_frame(seq.frames[spec.gt_apex],
                                     seq.frames[spec.gt_onset]);
  for (long p = 0; p < rise.values.size(); ++p) {
    if (!sample.deformation_mask[p]) {
      CHECK(rise.values[p] == 0.0);
    }
  }
  CHECK(rise.values.abs().maxCoeff() > 0.0);
}

TEST_CASE("motion_intensity_curve modes") {
  SUBCASE("constant sequence gives an all-zero curve") {
    std::vector<Frame> frames(5, constant_frame(3, 3, 50.0));
    const FrameSequence seq("c", "s", 30.0, frames);
    const auto curve = motion_intensity_curve(seq, CurveMode::FixedFirst);
    for (double v : curve.values) CHECK(v == 0.0);
  }

  SUBCASE("fixed-onset argmax sits at the synthetic apex") {
    SyntheticSpec spec;
    spec.noise_sigma = 0.0;
    const auto sample = generate_sequence(spec);
    const auto curve = motion_intensity_curve(
        sample.sequence, CurveMode::FixedOnset, spec.gt_onset);
    long argmax = 0;
    for (size_t t = 1; t < curve.values.size(); ++t) {
      if (curve.values[t] > curve.values[argmax]) argmax = static_cast<long>(t);
    }
    CHECK(argmax == spec.gt_apex);
  }

  SUBCASE("two-frame consecutive curve") {
    std::vector<Frame> frames{constant_frame(2, 2, 0.0),
                              constant_frame(2, 2, 10.0)};
    const FrameSequence seq("t", "s", 30.0, frames);
    const auto curve = motion_intensity_curve(seq, CurveMode::Consecutive);
    CHECK(curve.values[0] == 0.0);
    CHECK(curve.values[1] ==
          doctest::Approx(frame_l2(seq.frames[1], seq.frames[0])));
  }

  SUBCASE("bad reference throws") {
    std::vector<Frame> frames(3, constant_frame(2, 2, 0.0));
    const FrameSequence seq("t", "s", 30.0, frames);
    CHECK_THROWS_AS(motion_intensity_curve(seq, CurveMode::FixedOnset, 3),
                    OutOfRange);
  }
}

TEST_CASE("difference_to_u8 mapping") {
  CHECK(difference_to_u8(0.0) == 128);
  CHECK(difference_to_u8(255.0) == 255);
  CHECK(difference_to_u8(-255.0) == 0);
  CHECK(difference_to_u8(1.0) == 128);
  CHECK(difference_to_u8(2.0) == 129);  // 128.5 rounds away from zero
}
