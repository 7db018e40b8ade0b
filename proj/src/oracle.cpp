#include "reanno/oracle.hpp"

#include <cmath>
#include <limits>

namespace reanno {
namespace oracle {

namespace {

// Plain left-to-right accumulation, written separately from the main path.
double naive_l2(const Frame& a, const Frame& b) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels) {
    throw DimensionMismatch("oracle: frame shapes differ");
  }
  long double acc = 0.0L;
  for (long p = 0; p < a.pixels.size(); ++p) {
    const long double d = static_cast<long double>(a.pixels[p]) -
                          static_cast<long double>(b.pixels[p]);
    acc += d * d;
  }
  return static_cast<double>(std::sqrt(static_cast<double>(acc)));
}

}  // namespace

Reannotation brute_force_reselect(const FrameSequence& seq,
                                  const Annotation& ann,
                                  const SearchConfig& cfg) {
  validate_annotation(ann, seq.length());
  const long n = seq.length();

  Reannotation re;
  re.original = ann;

  long best_o = ann.onset;
  long best_a = ann.apex;
  double best_diff = 0.0;
  long rise_count = 0;

  if (ann.onset == ann.apex) {
    rise_count = 1;
  } else {
    const long r_rise = static_cast<long>(
        std::floor((ann.apex - ann.onset) * cfg.lambda_rise));
    bool have_best = false;
    for (long o = ann.onset; o <= ann.onset + r_rise; ++o) {
      if (o < 0 || o >= n) continue;
      for (long a = ann.apex - r_rise; a <= ann.apex + r_rise; ++a) {
        if (a < 0 || a >= n || o >= a) continue;
        ++rise_count;
        const double d = naive_l2(seq.frames[a], seq.frames[o]);
        bool take;
        if (!have_best) {
          take = true;
        } else if (d > best_diff) {
          take = true;
        } else if (d < best_diff) {
          take = false;
        } else {
          const long nd = std::labs(o - ann.onset) + std::labs(a - ann.apex);
          const long bd = std::labs(best_o - ann.onset) +
                          std::labs(best_a - ann.apex);
          if (nd < bd) {
            take = true;
          } else if (nd > bd) {
            take = false;
          } else if (o != best_o) {
            take = o < best_o;
          } else {
            take = a < best_a;
          }
        }
        if (take) {
          best_o = o;
          best_a = a;
          best_diff = d;
          have_best = true;
        }
      }
    }
  }

  re.rise_peak_diff = (ann.onset == ann.apex) ? 0.0 : best_diff;
  re.rise_candidate_count = rise_count;

  const long r_fall = static_cast<long>(
      std::floor((ann.offset - ann.apex) * cfg.lambda_fall));
  long best_c = -1;
  double best_fall = 0.0;
  long fall_count = 0;
  for (long c = ann.offset; c <= ann.offset + r_fall; ++c) {
    if (c < 0 || c >= n || c <= best_a) continue;
    ++fall_count;
    const double d = naive_l2(seq.frames[best_a], seq.frames[c]);
    bool take;
    if (best_c < 0) {
      take = true;
    } else if (d > best_fall) {
      take = true;
    } else if (d < best_fall) {
      take = false;
    } else {
      const long nd = std::labs(c - ann.offset);
      const long bd = std::labs(best_c - ann.offset);
      take = nd < bd || (nd == bd && c < best_c);
    }
    if (take) {
      best_c = c;
      best_fall = d;
    }
  }
  if (best_c < 0) {
    best_c = ann.offset > best_a ? ann.offset : best_a;
    best_fall = 0.0;
    re.fall_degenerate = true;
  }
  re.fall_peak_diff = best_fall;
  re.fall_candidate_count = fall_count;
  re.reselected = Annotation{best_o, best_a, best_c};
  return re;
}

GlobalPair global_argmax_pair(const FrameSequence& seq) {
  if (seq.length() < 2) {
    throw DimensionMismatch("global_argmax_pair: need at least 2 frames");
  }
  GlobalPair best{0, 1, naive_l2(seq.frames[0], seq.frames[1])};
  for (long i = 0; i < seq.length(); ++i) {
    for (long j = i + 1; j < seq.length(); ++j) {
      if (i == 0 && j == 1) continue;
      const double d = naive_l2(seq.frames[i], seq.frames[j]);
      if (d > best.diff) best = GlobalPair{i, j, d};
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace reanno
