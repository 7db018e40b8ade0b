#include "reanno/metrics.hpp"

#include <algorithm>
#include <map>

namespace reanno {

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_names)
    : names_(std::move(class_names)) {
  if (names_.size() < 2) {
    throw EmptyMatrix("ConfusionMatrix: need at least 2 classes");
  }
  counts_ = CountMatrix::Zero(size(), size());
}

long ConfusionMatrix::index_of(const std::string& label) const {
  const auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) throw UnknownClass("unknown class: " + label);
  return static_cast<long>(it - names_.begin());
}

void ConfusionMatrix::accumulate(const std::string& true_label,
                                 const std::string& predicted_label) {
  counts_(index_of(true_label), index_of(predicted_label)) += 1;
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  if (other.names_ != names_) {
    throw UnknownClass("ConfusionMatrix::merge: class name mismatch");
  }
  counts_ += other.counts_;
}

void ConfusionMatrix::set_counts(const CountMatrix& counts) {
  if (counts.rows() != size() || counts.cols() != size()) {
    throw DimensionMismatch("ConfusionMatrix::set_counts: wrong shape");
  }
  if ((counts.array() < 0).any()) {
    throw OutOfRange("ConfusionMatrix::set_counts: negative count");
  }
  counts_ = counts;
}

namespace {

void require_nonempty(const ConfusionMatrix& cm) {
  if (cm.total() < 1) throw EmptyMatrix("confusion matrix has no counts");
}

}  // namespace

double uf1(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  double sum = 0.0;
  for (long i = 0; i < cm.size(); ++i) {
    const long tp = cm.true_positives(i);
    const long denom = 2 * tp + cm.false_positives(i) + cm.false_negatives(i);
    if (denom > 0) sum += 2.0 * static_cast<double>(tp) / denom;
  }
  return sum / static_cast<double>(cm.size());
}

double uf1_as_printed(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  double sum = 0.0;
  for (long i = 0; i < cm.size(); ++i) {
    const long tp = cm.true_positives(i);
    const long denom = tp + cm.false_positives(i) + cm.false_negatives(i);
    if (denom > 0) sum += 2.0 * static_cast<double>(tp) / denom;
  }
  return sum / static_cast<double>(cm.size());
}

double uar(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  double sum = 0.0;
  for (long i = 0; i < cm.size(); ++i) {
    const long n = cm.support(i);
    if (n > 0) sum += static_cast<double>(cm.true_positives(i)) / n;
  }
  return sum / static_cast<double>(cm.size());
}

double accuracy(const ConfusionMatrix& cm) {
  require_nonempty(cm);
  return static_cast<double>(cm.counts().trace()) /
         static_cast<double>(cm.total());
}

std::vector<LosoSplit> loso_splits(
    const std::vector<std::pair<std::string, std::string>>& samples) {
  std::map<std::string, std::vector<std::string>> by_subject;
  for (const auto& [sample_id, subject_id] : samples) {
    by_subject[subject_id].push_back(sample_id);
  }
  if (by_subject.size() < 2) {
    throw SingleSubject("loso_splits: need at least 2 distinct subjects");
  }
  std::vector<LosoSplit> splits;
  for (const auto& [subject, test_ids] : by_subject) {
    LosoSplit split;
    split.held_out_subject = subject;
    split.test_ids = test_ids;
    for (const auto& [sample_id, subject_id] : samples) {
      if (subject_id != subject) split.train_ids.push_back(sample_id);
    }
    splits.push_back(std::move(split));
  }
  return splits;
}

}  // namespace reanno
