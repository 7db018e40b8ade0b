#pragma once

#include "reanno/types.hpp"

#include <utility>

namespace reanno {

/// One (onset candidate, apex candidate) pair with its frame difference.
struct CandidatePair {
  long onset_candidate = 0;
  long apex_candidate = 0;
  double diff = 0.0;
};

/// Integer search radius R = floor(span * lambda).
long search_radius(long span, double lambda);

/// Enumerates rise-phase candidate pairs (o, a) with
/// o in [onset, onset + r_rise] and a in [apex - r_rise, apex + r_rise],
/// clipped to [0, seq_len) and filtered to o < a, in ascending (o, a) order.
/// The original (onset, apex) pair is always included when onset < apex.
std::vector<std::pair<long, long>> rise_candidates(const Annotation& ann,
                                                   long r_rise, long seq_len);

struct RiseResult {
  long onset = 0;
  long apex = 0;
  double peak_diff = 0.0;
  long candidate_count = 0;
};

struct FallResult {
  long offset = 0;
  double peak_diff = 0.0;
  long candidate_count = 0;
  bool degenerate = false;
};

/// Re-selects onset and apex as the candidate pair maximizing frame_l2.
/// Ties prefer the pair closest to the annotation (|o - onset| + |a - apex|),
/// then smaller o, then smaller a. A coincident annotation (onset == apex)
/// has no pair to maximize and returns identity.
RiseResult reselect_rise(const FrameSequence& seq, const Annotation& ann,
                         const SearchConfig& cfg);

/// Re-selects the offset among c in [offset, offset + r_fall], filtered to
/// c > apex_new, maximizing frame_l2(f_apex_new, f_c). An empty candidate set
/// falls back to max(offset, apex_new) and is flagged degenerate.
FallResult reselect_fall(const FrameSequence& seq, long apex_new,
                         const Annotation& ann, const SearchConfig& cfg);

/// Full re-selection: rise search, then fall search anchored on the new apex.
Reannotation reselect(const FrameSequence& seq, const Annotation& ann,
                      const SearchConfig& cfg);

}  // namespace reanno
