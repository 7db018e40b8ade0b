#include "reanno/manifest.hpp"

#include "reanno/csv.hpp"
#include "reanno/pgm.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace reanno {

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long parse_long(const std::string& s, const std::string& what, size_t row) {
  try {
    size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("manifest row " + std::to_string(row) + ": bad " + what +
                     ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what, size_t row) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("manifest row " + std::to_string(row) + ": bad " + what +
                     ": '" + s + "'");
  }
}

// Matches 'name' against a pattern where '*' spans any substring.
bool glob_match(const std::string& pattern, const std::string& name) {
  size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<fs::path> resolve_frames(const fs::path& manifest_dir,
                                     const std::string& pattern,
                                     const std::string& sample_id) {
  const fs::path full = manifest_dir / pattern;
  std::vector<fs::path> paths;
  if (fs::is_directory(full)) {
    for (const auto& e : fs::directory_iterator(full)) {
      if (e.is_regular_file() && e.path().extension() == ".pgm") {
        paths.push_back(e.path());
      }
    }
  } else {
    const fs::path dir = full.parent_path();
    const std::string leaf = full.filename().string();
    if (fs::is_directory(dir)) {
      for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && glob_match(leaf, e.path().filename().string())) {
          paths.push_back(e.path());
        }
      }
    }
  }
  if (paths.empty()) {
    throw MissingFrames("sample " + sample_id + ": no frames match pattern '" +
                        pattern + "'");
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  return paths;
}

}  // namespace

std::vector<SampleDescriptor> load_manifest(const fs::path& path) {
  const auto rows = csv::parse(read_file(path));
  if (rows.empty() || csv::join_row(rows.front()) != kManifestHeader) {
    throw ParseError("manifest " + path.string() +
                     ": missing or wrong header (expected '" +
                     std::string(kManifestHeader) + "')");
  }
  const fs::path dir = path.parent_path();

  std::vector<SampleDescriptor> out;
  std::set<std::string> seen_ids;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 10) {
      throw ParseError("manifest row " + std::to_string(r) + ": expected 10 "
                       "fields, got " + std::to_string(row.size()));
    }
    SampleDescriptor d;
    d.sample_id = row[0];
    d.subject_id = row[1];
    d.label = row[2];
    d.group = row[3];
    d.fps = parse_double(row[4], "fps", r);
    d.index_base = static_cast<int>(parse_long(row[5], "index_base", r));
    if (d.sample_id.empty()) {
      throw ParseError("manifest row " + std::to_string(r) + ": empty sample_id");
    }
    if (!seen_ids.insert(d.sample_id).second) {
      throw ParseError("manifest: duplicate sample_id '" + d.sample_id + "'");
    }
    if (d.fps <= 0.0) {
      throw ParseError("manifest row " + std::to_string(r) + ": fps must be > 0");
    }
    if (d.index_base != 0 && d.index_base != 1) {
      throw ParseError("manifest row " + std::to_string(r) +
                       ": index_base must be 0 or 1");
    }
    d.annotation.onset = parse_long(row[6], "onset", r) - d.index_base;
    d.annotation.apex = parse_long(row[7], "apex", r) - d.index_base;
    d.annotation.offset = parse_long(row[8], "offset", r) - d.index_base;
    d.frame_pattern = row[9];
    d.frame_paths = resolve_frames(dir, d.frame_pattern, d.sample_id);
    try {
      validate_annotation(d.annotation,
                          static_cast<long>(d.frame_paths.size()));
    } catch (const Error& e) {
      throw InvalidAnnotation("sample " + d.sample_id + ": " + e.what());
    }
    out.push_back(std::move(d));
  }
  return out;
}

void write_manifest(const fs::path& path,
                    const std::vector<SampleDescriptor>& rows) {
  std::ostringstream out;
  out << kManifestHeader << "\n";
  for (const auto& d : rows) {
    out << csv::join_row({d.sample_id, d.subject_id, d.label, d.group,
                          csv::format_real(d.fps),
                          std::to_string(d.index_base),
                          std::to_string(d.annotation.onset + d.index_base),
                          std::to_string(d.annotation.apex + d.index_base),
                          std::to_string(d.annotation.offset + d.index_base),
                          d.frame_pattern})
        << "\n";
  }
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << out.str();
  }
  fs::rename(tmp, path);
}

FrameSequence load_sequence(const SampleDescriptor& desc) {
  std::vector<Frame> frames;
  frames.reserve(desc.frame_paths.size());
  for (const auto& p : desc.frame_paths) frames.push_back(load_frame(p));
  return FrameSequence(desc.sample_id, desc.subject_id, desc.fps,
                       std::move(frames),
                       desc.label.empty() ? std::nullopt
                                          : std::make_optional(desc.label));
}

}  // namespace reanno
