#pragma once

#include "reanno/types.hpp"

namespace reanno {
namespace oracle {

/// Naive re-implementation of the windowed search, kept deliberately separate
/// from the main path (own difference loop, own tie handling) so the two can
/// check each other. O(candidates * pixels), single-threaded.
Reannotation brute_force_reselect(const FrameSequence& seq,
                                  const Annotation& ann,
                                  const SearchConfig& cfg);

struct GlobalPair {
  long i = 0;
  long j = 0;
  double diff = 0.0;
};

/// Unconstrained diagnostic: the frame pair (i < j) over the whole sequence
/// with the largest L2 difference. Ties pick smaller i, then smaller j.
GlobalPair global_argmax_pair(const FrameSequence& seq);

}  // namespace oracle
}  // namespace reanno
