#pragma once

#include "reanno/types.hpp"

#include <filesystem>

namespace reanno {

/// One manifest row after normalization: annotation indices are 0-based and
/// frame paths resolved and sorted, but pixels are not loaded yet.
struct SampleDescriptor {
  std::string sample_id;
  std::string subject_id;
  std::string label;
  std::string group;
  double fps = 0.0;
  int index_base = 0;  // as declared in the file, for round-tripping
  Annotation annotation;  // 0-based
  std::string frame_pattern;  // as declared, relative to the manifest
  std::vector<std::filesystem::path> frame_paths;  // resolved, sorted
};

inline constexpr const char* kManifestHeader =
    "sample_id,subject_id,label,group,fps,index_base,onset,apex,offset,"
    "frame_pattern";

/// Loads and validates a manifest CSV. frame_pattern may be a directory
/// (all .pgm files inside) or a glob with '*' on the filename; matches are
/// sorted lexicographically, which is the declared temporal order.
std::vector<SampleDescriptor> load_manifest(const std::filesystem::path& path);

/// Writes descriptors back in manifest format (annotations re-encoded in each
/// row's declared index base).
void write_manifest(const std::filesystem::path& path,
                    const std::vector<SampleDescriptor>& rows);

/// Loads all frames of a sample into memory.
FrameSequence load_sequence(const SampleDescriptor& desc);

}  // namespace reanno
