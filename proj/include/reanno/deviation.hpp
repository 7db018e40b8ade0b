#pragma once

#include "reanno/types.hpp"

#include <map>

namespace reanno {

/// Deviation of one keyframe between original and re-selected annotations.
struct KeyframeDeviation {
  long d_frames = 0;         // |f_re - f_orig|
  long d_signed = 0;         // f_re - f_orig
  double d_pct = 0.0;        // d_frames / seq_len * 100
  double d_ms = 0.0;         // d_frames * 1000 / fps
};

struct DeviationRecord {
  KeyframeDeviation onset;
  KeyframeDeviation apex;
  KeyframeDeviation offset;
  double mean_d_ms = 0.0;
  double mean_d_pct = 0.0;
  long seq_len = 0;
  double fps = 0.0;
};

DeviationRecord deviation_record(const Annotation& orig, const Annotation& re,
                                 long seq_len, double fps);

/// One sample of a sweep corpus: sequence plus its (original) annotation and a
/// free-form group tag used for aggregation.
struct SweepSample {
  const FrameSequence* seq = nullptr;
  Annotation annotation;
  std::string group;
};

struct SweepCell {
  double mean_d_pct = 0.0;
  double mean_d_ms = 0.0;
  long n_samples = 0;
};

struct SweepReport {
  std::vector<std::string> groups;  // ascending
  std::vector<double> lambdas;      // input order
  // keyed by (group, lambda index)
  std::map<std::pair<std::string, size_t>, SweepCell> cells;
};

/// Runs re-selection at every lambda over the corpus and aggregates mean
/// deviations per (group, lambda). Aggregation order is fixed by corpus
/// order, independent of any caller-side parallelism.
SweepReport lambda_sweep(const std::vector<SweepSample>& corpus,
                         const std::vector<double>& lambdas);

}  // namespace reanno
