#include "reanno/metrics.hpp"

#include "reanno/synth.hpp"

#include <doctest.h>

#include <set>

using namespace reanno;

namespace {

ConfusionMatrix matrix2(long a, long b, long c, long d) {
  ConfusionMatrix cm({"A", "B"});
  CountMatrix counts(2, 2);
  counts << a, b, c, d;
  cm.set_counts(counts);
  return cm;
}

}  // namespace

TEST_CASE("accumulate increments the right cell") {
  ConfusionMatrix cm({"A", "B"});
  cm.accumulate("A", "A");
  CHECK(cm.counts()(0, 0) == 1);
  CHECK(cm.counts().sum() == 1);
  cm.accumulate("A", "B");
  CHECK(cm.counts()(0, 1) == 1);
  CHECK_THROWS_AS(cm.accumulate("A", "C"), UnknownClass);
}

TEST_CASE("accumulation is order-independent") {
  ConfusionMatrix a({"x", "y"});
  ConfusionMatrix b({"x", "y"});
  const std::vector<std::pair<std::string, std::string>> stream{
      {"x", "x"}, {"x", "y"}, {"y", "y"}, {"y", "x"}, {"x", "x"}};
  for (const auto& [t, p] : stream) a.accumulate(t, p);
  for (auto it = stream.rbegin(); it != stream.rend(); ++it) {
    b.accumulate(it->first, it->second);
  }
  CHECK(a.counts() == b.counts());
}

TEST_CASE("perfect diagonal gives 1.0 on every metric") {
  const auto cm = matrix2(5, 0, 0, 5);
  CHECK(uf1(cm) == 1.0);
  CHECK(uar(cm) == 1.0);
  CHECK(accuracy(cm) == 1.0);
}

TEST_CASE("hand-evaluated UF1 and UAR on [[3,1],[2,4]]") {
  const auto cm = matrix2(3, 1, 2, 4);
  // class A: 2*3 / (2*3 + 2 + 1); class B: 2*4 / (2*4 + 1 + 2)
  CHECK(uf1(cm) == doctest::Approx(0.696970).epsilon(1e-6));
  CHECK(uar(cm) == doctest::Approx(0.708333).epsilon(1e-6));
  CHECK(accuracy(cm) == doctest::Approx(0.7));
}

TEST_CASE("all-wrong predictions give zero UF1") {
  const auto cm = matrix2(0, 3, 3, 0);
  CHECK(uf1(cm) == 0.0);
  CHECK(uar(cm) == 0.0);
  CHECK(accuracy(cm) == 0.0);
}

TEST_CASE("the paper-printed denominator inflates UF1") {
  const auto cm = matrix2(3, 1, 2, 4);
  CHECK(uf1_as_printed(cm) > uf1(cm));
  // with a perfect diagonal the printed form exceeds 1
  CHECK(uf1_as_printed(matrix2(5, 0, 0, 5)) == doctest::Approx(2.0));
}

TEST_CASE("empty matrix is rejected") {
  ConfusionMatrix cm({"A", "B"});
  CHECK_THROWS_AS(uf1(cm), EmptyMatrix);
  CHECK_THROWS_AS(uar(cm), EmptyMatrix);
  CHECK_THROWS_AS(accuracy(cm), EmptyMatrix);
}

TEST_CASE("metrics are invariant under class permutation") {
  ConfusionMatrix cm({"A", "B", "C"});
  CountMatrix counts(3, 3);
  counts << 4, 1, 0, 2, 5, 1, 0, 2, 6;
  cm.set_counts(counts);

  ConfusionMatrix permuted({"C", "A", "B"});
  CountMatrix p(3, 3);
  // rows/cols reordered consistently with the permuted names
  p << 6, 0, 2, 0, 4, 1, 1, 2, 5;
  permuted.set_counts(p);

  CHECK(uf1(cm) == doctest::Approx(uf1(permuted)).epsilon(1e-12));
  CHECK(uar(cm) == doctest::Approx(uar(permuted)).epsilon(1e-12));
  CHECK(accuracy(cm) == doctest::Approx(accuracy(permuted)).epsilon(1e-12));
}

TEST_CASE("UAR is invariant under per-class row scaling") {
  const auto cm = matrix2(3, 1, 2, 4);
  const auto scaled = matrix2(9, 3, 2, 4);  // row A tripled
  CHECK(uar(cm) == doctest::Approx(uar(scaled)).epsilon(1e-12));
}

TEST_CASE("uniform random predictions on balanced classes give UAR near 1/C") {
  // Monte Carlo: pooled matrix over many uniform predictions
  const std::vector<std::string> names{"a", "b", "c", "d"};
  ConfusionMatrix cm(names);
  SeededStream rng(123, 0);
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto& t = names[i % names.size()];
    const auto& p = names[rng.next_u64() % names.size()];
    cm.accumulate(t, p);
  }
  // per-class recall is Binomial(n, 1/4)/n; UAR averages 4 of them
  const double sigma = std::sqrt(0.25 * 0.75 / (trials / 4.0)) / 2.0;
  CHECK(std::abs(uar(cm) - 0.25) < 3.0 * sigma);
}

TEST_CASE("loso splits partition the sample set") {
  const std::vector<std::pair<std::string, std::string>> samples{
      {"m1", "s1"}, {"m2", "s1"}, {"m3", "s2"}, {"m4", "s2"},
      {"m5", "s3"}, {"m6", "s3"}};
  const auto splits = loso_splits(samples);
  REQUIRE(splits.size() == 3);
  std::set<std::string> all_test;
  for (const auto& split : splits) {
    CHECK(split.test_ids.size() == 2);
    CHECK(split.train_ids.size() == 4);
    for (const auto& id : split.test_ids) {
      CHECK(all_test.insert(id).second);  // pairwise disjoint
    }
  }
  CHECK(all_test.size() == samples.size());
  // ordered by subject ascending
  CHECK(splits[0].held_out_subject == "s1");
  CHECK(splits[2].held_out_subject == "s3");
}

TEST_CASE("loso with unequal subject sizes") {
  const std::vector<std::pair<std::string, std::string>> samples{
      {"m1", "s1"}, {"m2", "s1"}, {"m3", "s1"}, {"m4", "s2"}};
  const auto splits = loso_splits(samples);
  REQUIRE(splits.size() == 2);
  CHECK(splits[0].test_ids.size() == 3);
  CHECK(splits[1].test_ids.size() == 1);
}

TEST_CASE("loso rejects a single subject") {
  CHECK_THROWS_AS(loso_splits({{"m1", "s1"}, {"m2", "s1"}}), SingleSubject);
}
