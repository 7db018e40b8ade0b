#include "reanno/pipeline.hpp"

#include "reanno/pgm.hpp"
#include "reanno/reselect.hpp"

#include <atomic>
#include <thread>

namespace fs = std::filesystem;

namespace reanno {

std::vector<Reannotation> reselect_manifest(
    const std::vector<SampleDescriptor>& rows, const SearchConfig& cfg,
    int jobs) {
  if (jobs < 1) jobs = 1;
  const size_t n = rows.size();
  std::vector<Reannotation> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        const FrameSequence seq = load_sequence(rows[i]);
        results[i] = reselect(seq, rows[i].annotation, cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (jobs == 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int n_threads = static_cast<int>(
        std::min<size_t>(static_cast<size_t>(jobs), n));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  return results;
}

std::vector<SampleDescriptor> write_synth_corpus(const SyntheticSpec& base,
                                                 long count,
                                                 std::uint64_t seed,
                                                 const fs::path& out_dir,
                                                 const CorpusJitter& jitter,
                                                 bool mixed_profiles) {
  if (count < 1) throw SpecInvalid("write_synth_corpus: count must be >= 1");
  fs::create_directories(out_dir);

  std::vector<SampleDescriptor> rows;
  for (long k = 0; k < count; ++k) {
    SyntheticSpec spec = base;
    SeededStream derive(seed, static_cast<std::uint64_t>(k) + 100);
    spec.seed = derive.next_u64();
    if (mixed_profiles) {
      spec.profile = (k % 2 == 0) ? Profile::Smooth : Profile::Fluctuating;
    }
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "_%03ld", k);
    spec.sample_id = base.sample_id + suffix;
    spec.subject_id = "subj" + std::to_string(k % 10);

    const SyntheticSample sample = generate_sequence(spec);
    const std::string frame_dir_name = spec.sample_id;
    const fs::path frame_dir = out_dir / frame_dir_name;
    fs::create_directories(frame_dir);
    for (long t = 0; t < sample.sequence.length(); ++t) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%05ld.pgm", t);
      write_pgm(frame_dir / name, sample.sequence.frames[t]);
    }

    SampleDescriptor d;
    d.sample_id = spec.sample_id;
    d.subject_id = spec.subject_id;
    d.label = spec.label;
    d.group = to_string(spec.profile);
    d.fps = spec.fps;
    d.index_base = 0;
    d.annotation = perturb_annotation(sample.ground_truth, jitter.onset,
                                      jitter.apex, jitter.offset,
                                      sample.sequence.length());
    d.frame_pattern = frame_dir_name;
    for (long t = 0; t < sample.sequence.length(); ++t) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%05ld.pgm", t);
      d.frame_paths.push_back(frame_dir / name);
    }
    rows.push_back(std::move(d));
  }

  write_manifest(out_dir / "manifest.csv", rows);

  // Ground-truth sidecar: unperturbed annotations for recovery checks.
  std::string gt = "sample_id,gt_onset,gt_apex,gt_offset\n";
  for (long k = 0; k < count; ++k) {
    gt += rows[k].sample_id + "," + std::to_string(base.gt_onset) + "," +
          std::to_string(base.gt_apex) + "," + std::to_string(base.gt_offset) +
          "\n";
  }
  {
    const fs::path tmp = out_dir / "ground_truth.csv.tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw IoError("cannot write " + tmp.string());
    std::fwrite(gt.data(), 1, gt.size(), f);
    std::fclose(f);
    fs::rename(tmp, out_dir / "ground_truth.csv");
  }
  return rows;
}

}  // namespace reanno
