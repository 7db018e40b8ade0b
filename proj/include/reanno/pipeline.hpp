#pragma once

#include "reanno/manifest.hpp"
#include "reanno/synth.hpp"
#include "reanno/types.hpp"

#include <filesystem>

namespace reanno {

/// Runs re-selection over every manifest row with a bounded worker pool.
/// Results come back in row order; output is identical for any job count.
std::vector<Reannotation> reselect_manifest(
    const std::vector<SampleDescriptor>& rows, const SearchConfig& cfg,
    int jobs);

/// Per-sample jitter applied by the synth corpus writer to the manifest
/// annotations (ground truth stays in a sidecar file).
struct CorpusJitter {
  long onset = 0;
  long apex = 0;
  long offset = 0;
};

/// Materializes `count` synthetic samples under out_dir: one PGM directory
/// per sample plus manifest.csv and ground_truth.csv. Sample seeds derive
/// from (seed, ordinal); sample ids are <base.sample_id>_NNN.
std::vector<SampleDescriptor> write_synth_corpus(
    const SyntheticSpec& base, long count, std::uint64_t seed,
    const std::filesystem::path& out_dir,
    const CorpusJitter& jitter = CorpusJitter{}, bool mixed_profiles = false);

}  // namespace reanno
