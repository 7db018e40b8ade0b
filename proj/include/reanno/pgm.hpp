#pragma once

#include "reanno/types.hpp"

#include <filesystem>

namespace reanno {

/// Decodes a binary PGM (P5, maxval 255) file into a grayscale frame.
/// Pixel recovery is bit-exact.
Frame load_frame(const std::filesystem::path& path);

/// Writes a grayscale frame as binary PGM. Intensities are rounded to the
/// nearest integer; they must already lie in [0, 255].
void write_pgm(const std::filesystem::path& path, const Frame& frame);

/// Raw P5 writer used for difference-frame exports where the 8-bit values are
/// produced by an explicit mapping.
void write_pgm_bytes(const std::filesystem::path& path, int width, int height,
                     const std::vector<unsigned char>& bytes);

}  // namespace reanno
