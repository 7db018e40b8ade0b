#pragma once

#include "reanno/types.hpp"

#include <Eigen/Core>

namespace reanno {

using CountMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// C x C confusion counts; rows are true classes, columns predicted.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> class_names);

  void accumulate(const std::string& true_label,
                  const std::string& predicted_label);

  /// Cell-wise addition; exact and order-free, used to merge per-worker
  /// matrices.
  void merge(const ConfusionMatrix& other);

  const std::vector<std::string>& class_names() const { return names_; }
  const CountMatrix& counts() const { return counts_; }
  long size() const { return static_cast<long>(names_.size()); }
  long total() const { return counts_.sum(); }

  long true_positives(long i) const { return counts_(i, i); }
  long false_positives(long i) const { return counts_.col(i).sum() - counts_(i, i); }
  long false_negatives(long i) const { return counts_.row(i).sum() - counts_(i, i); }
  long support(long i) const { return counts_.row(i).sum(); }

  void set_counts(const CountMatrix& counts);

 private:
  std::vector<std::string> names_;
  CountMatrix counts_;

  long index_of(const std::string& label) const;
};

/// Macro-averaged F1: (1/C) sum_i 2 TP_i / (2 TP_i + FP_i + FN_i).
/// Classes with no support and no predictions contribute 0.
double uf1(const ConfusionMatrix& cm);

/// The same macro average with the denominator TP_i + FP_i + FN_i, which can
/// exceed 1. Kept behind a flag for comparison against the standard form.
double uf1_as_printed(const ConfusionMatrix& cm);

/// Unweighted average recall: (1/C) sum_i TP_i / N_i; zero-support classes
/// contribute 0.
double uar(const ConfusionMatrix& cm);

double accuracy(const ConfusionMatrix& cm);

struct LosoSplit {
  std::string held_out_subject;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
};

/// Leave-one-subject-out splits, ordered by subject id ascending. Test sets
/// partition the sample set.
std::vector<LosoSplit> loso_splits(
    const std::vector<std::pair<std::string, std::string>>& samples);

}  // namespace reanno
