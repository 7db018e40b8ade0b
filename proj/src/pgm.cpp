#include "reanno/pgm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace reanno {

namespace {

// Reads one whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok += static_cast<char>(c);
  }
  return tok;
}

long parse_dim(const std::string& tok, const std::string& what) {
  if (tok.empty()) throw CorruptHeader("pgm: missing " + what);
  try {
    size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw CorruptHeader("pgm: bad " + what + ": " + tok);
  }
}

}  // namespace

Frame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P') {
    throw CorruptHeader("not a PNM file: " + path.string());
  }
  if (magic[1] != '5') {
    throw UnsupportedFormat("unsupported PNM variant P" +
                            std::string(1, magic[1]) + ": " + path.string());
  }
  const long width = parse_dim(next_token(in), "width");
  const long height = parse_dim(next_token(in), "height");
  const long maxval = parse_dim(next_token(in), "maxval");
  if (maxval != 255) {
    throw UnsupportedFormat("pgm maxval " + std::to_string(maxval) +
                            " not supported (must be 255): " + path.string());
  }
  // header token reader already consumed the single whitespace before payload
  const long n = width * height;
  std::vector<unsigned char> bytes(n);
  in.read(reinterpret_cast<char*>(bytes.data()), n);
  if (in.gcount() != n) {
    throw TruncatedPixels("pgm payload truncated: " + path.string());
  }

  PixelArray px(n);
  for (long i = 0; i < n; ++i) px[i] = static_cast<double>(bytes[i]);
  return Frame(static_cast<int>(width), static_cast<int>(height), 1,
               std::move(px));
}

void write_pgm(const std::filesystem::path& path, const Frame& frame) {
  if (frame.channels != 1) {
    throw UnsupportedFormat("write_pgm: grayscale frames only");
  }
  std::vector<unsigned char> bytes(frame.pixels.size());
  for (long i = 0; i < frame.pixels.size(); ++i) {
    const long v = std::lround(frame.pixels[i]);
    bytes[i] = static_cast<unsigned char>(std::clamp(v, 0L, 255L));
  }
  write_pgm_bytes(path, frame.width, frame.height, bytes);
}

void write_pgm_bytes(const std::filesystem::path& path, int width, int height,
                     const std::vector<unsigned char>& bytes) {
  if (static_cast<long>(bytes.size()) != static_cast<long>(width) * height) {
    throw DimensionMismatch("write_pgm_bytes: payload size mismatch");
  }
  std::ostringstream header;
  header << "P5\n" << width << " " << height << "\n255\n";
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << header.str();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<long>(bytes.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace reanno
