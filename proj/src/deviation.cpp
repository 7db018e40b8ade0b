#include "reanno/deviation.hpp"

#include "reanno/reselect.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace reanno {

namespace {

KeyframeDeviation keyframe_deviation(long orig, long re, long seq_len,
                                     double fps) {
  KeyframeDeviation d;
  d.d_signed = re - orig;
  d.d_frames = std::labs(d.d_signed);
  d.d_pct = static_cast<double>(d.d_frames) / static_cast<double>(seq_len) * 100.0;
  d.d_ms = static_cast<double>(d.d_frames) * 1000.0 / fps;
  return d;
}

}  // namespace

DeviationRecord deviation_record(const Annotation& orig, const Annotation& re,
                                 long seq_len, double fps) {
  if (fps <= 0.0) throw InvalidFps("deviation_record: fps must be > 0");
  validate_annotation(orig, seq_len);
  validate_annotation(re, seq_len);
  DeviationRecord rec;
  rec.seq_len = seq_len;
  rec.fps = fps;
  rec.onset = keyframe_deviation(orig.onset, re.onset, seq_len, fps);
  rec.apex = keyframe_deviation(orig.apex, re.apex, seq_len, fps);
  rec.offset = keyframe_deviation(orig.offset, re.offset, seq_len, fps);
  rec.mean_d_ms = (rec.onset.d_ms + rec.apex.d_ms + rec.offset.d_ms) / 3.0;
  rec.mean_d_pct = (rec.onset.d_pct + rec.apex.d_pct + rec.offset.d_pct) / 3.0;
  return rec;
}

SweepReport lambda_sweep(const std::vector<SweepSample>& corpus,
                         const std::vector<double>& lambdas) {
  if (corpus.empty()) throw ParseError("lambda_sweep: empty corpus");
  for (double l : lambdas) {
    if (l < 0.0 || l > 1.0) {
      throw OutOfRange("lambda_sweep: lambda outside [0, 1]");
    }
  }

  SweepReport report;
  report.lambdas = lambdas;
  std::set<std::string> group_set;
  for (const auto& s : corpus) group_set.insert(s.group);
  report.groups.assign(group_set.begin(), group_set.end());

  for (size_t li = 0; li < lambdas.size(); ++li) {
    const SearchConfig cfg = SearchConfig::uniform(lambdas[li]);
    std::map<std::string, std::vector<DeviationRecord>> per_group;
    for (const auto& s : corpus) {
      try {
        const Reannotation re = reselect(*s.seq, s.annotation, cfg);
        per_group[s.group].push_back(deviation_record(
            re.original, re.reselected, s.seq->length(), s.seq->fps));
      } catch (const Error& e) {
        throw Error("lambda_sweep: sample " + s.seq->sample_id + ": " +
                    e.what());
      }
    }
    for (const auto& [group, recs] : per_group) {
      SweepCell cell;
      cell.n_samples = static_cast<long>(recs.size());
      // summation order fixed by sorting so cell values are invariant under
      // corpus permutation
      std::vector<std::pair<double, double>> vals;
      vals.reserve(recs.size());
      for (const auto& r : recs) vals.emplace_back(r.mean_d_pct, r.mean_d_ms);
      std::sort(vals.begin(), vals.end());
      for (const auto& [pct, ms] : vals) {
        cell.mean_d_pct += pct;
        cell.mean_d_ms += ms;
      }
      cell.mean_d_pct /= static_cast<double>(recs.size());
      cell.mean_d_ms /= static_cast<double>(recs.size());
      report.cells[{group, li}] = cell;
    }
  }
  return report;
}

}  // namespace reanno
