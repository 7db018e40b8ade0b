#include "reanno/reselect.hpp"

#include "reanno/diff.hpp"

#include <algorithm>
#include <cmath>

namespace reanno {

long search_radius(long span, double lambda) {
  if (span < 0) throw OutOfRange("search_radius: span must be >= 0");
  return static_cast<long>(std::floor(static_cast<double>(span) * lambda));
}

std::vector<std::pair<long, long>> rise_candidates(const Annotation& ann,
                                                   long r_rise, long seq_len) {
  const long o_lo = std::max<long>(0, ann.onset);
  const long o_hi = std::min(seq_len - 1, ann.onset + r_rise);
  const long a_lo = std::max<long>(0, ann.apex - r_rise);
  const long a_hi = std::min(seq_len - 1, ann.apex + r_rise);
  std::vector<std::pair<long, long>> pairs;
  for (long o = o_lo; o <= o_hi; ++o) {
    for (long a = a_lo; a <= a_hi; ++a) {
      if (o < a) pairs.emplace_back(o, a);
    }
  }
  return pairs;
}

namespace {

// Tie-break key: closest to the human annotation, then smaller o, then a.
bool rise_better(const CandidatePair& cand, const CandidatePair& best,
                 const Annotation& ann) {
  if (cand.diff != best.diff) return cand.diff > best.diff;
  const long cand_dist = std::abs(cand.onset_candidate - ann.onset) +
                         std::abs(cand.apex_candidate - ann.apex);
  const long best_dist = std::abs(best.onset_candidate - ann.onset) +
                         std::abs(best.apex_candidate - ann.apex);
  if (cand_dist != best_dist) return cand_dist < best_dist;
  if (cand.onset_candidate != best.onset_candidate) {
    return cand.onset_candidate < best.onset_candidate;
  }
  return cand.apex_candidate < best.apex_candidate;
}

}  // namespace

RiseResult reselect_rise(const FrameSequence& seq, const Annotation& ann,
                         const SearchConfig& cfg) {
  validate_annotation(ann, seq.length());
  if (ann.onset == ann.apex) {
    // zero-length rise: nothing to maximize
    return RiseResult{ann.onset, ann.apex, 0.0, 1};
  }
  const long r = search_radius(ann.apex - ann.onset, cfg.lambda_rise);
  const auto pairs = rise_candidates(ann, r, seq.length());
  if (pairs.empty()) {
    throw EmptyCandidateSet("rise candidate set empty for sample " +
                            seq.sample_id);
  }
  CandidatePair best{pairs.front().first, pairs.front().second,
                     frame_l2(seq.frames[pairs.front().second],
                              seq.frames[pairs.front().first])};
  for (size_t i = 1; i < pairs.size(); ++i) {
    CandidatePair cand{pairs[i].first, pairs[i].second,
                       frame_l2(seq.frames[pairs[i].second],
                                seq.frames[pairs[i].first])};
    if (rise_better(cand, best, ann)) best = cand;
  }
  return RiseResult{best.onset_candidate, best.apex_candidate, best.diff,
                    static_cast<long>(pairs.size())};
}

FallResult reselect_fall(const FrameSequence& seq, long apex_new,
                         const Annotation& ann, const SearchConfig& cfg) {
  validate_annotation(ann, seq.length());
  if (apex_new < 0 || apex_new >= seq.length()) {
    throw OutOfRange("reselect_fall: apex index out of range");
  }
  const long r = search_radius(ann.offset - ann.apex, cfg.lambda_fall);
  const long c_lo = std::max<long>(0, ann.offset);
  const long c_hi = std::min(seq.length() - 1, ann.offset + r);

  FallResult res;
  bool found = false;
  for (long c = c_lo; c <= c_hi; ++c) {
    if (c <= apex_new) continue;
    const double d = frame_l2(seq.frames[apex_new], seq.frames[c]);
    ++res.candidate_count;
    bool better = false;
    if (!found) {
      better = true;
    } else if (d != res.peak_diff) {
      better = d > res.peak_diff;
    } else {
      const long cand_dist = std::abs(c - ann.offset);
      const long best_dist = std::abs(res.offset - ann.offset);
      better = cand_dist < best_dist || (cand_dist == best_dist && c < res.offset);
    }
    if (better) {
      res.offset = c;
      res.peak_diff = d;
      found = true;
    }
  }
  if (!found) {
    res.offset = std::max(ann.offset, apex_new);
    res.peak_diff = 0.0;
    res.degenerate = true;
  }
  return res;
}

Reannotation reselect(const FrameSequence& seq, const Annotation& ann,
                      const SearchConfig& cfg) {
  const RiseResult rise = reselect_rise(seq, ann, cfg);
  const FallResult fall = reselect_fall(seq, rise.apex, ann, cfg);

  Reannotation re;
  re.original = ann;
  re.reselected = Annotation{rise.onset, rise.apex, fall.offset};
  re.rise_peak_diff = rise.peak_diff;
  re.fall_peak_diff = fall.peak_diff;
  re.rise_candidate_count = rise.candidate_count;
  re.fall_candidate_count = fall.candidate_count;
  re.fall_degenerate = fall.degenerate;
  validate_annotation(re.reselected, seq.length());
  return re;
}

}  // namespace reanno
