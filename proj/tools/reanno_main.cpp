// Command-line front end for micro-expression keyframe re-selection and
// annotation-deviation reporting.

#include "reanno/csv.hpp"
#include "reanno/deviation.hpp"
#include "reanno/diff.hpp"
#include "reanno/manifest.hpp"
#include "reanno/metrics.hpp"
#include "reanno/oracle.hpp"
#include "reanno/pipeline.hpp"
#include "reanno/reports.hpp"
#include "reanno/reselect.hpp"
#include "reanno/synth.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reanno;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SynthSpecFile {
  SyntheticSpec base;
  CorpusJitter jitter;
  bool mixed = false;
};

SynthSpecFile parse_synth_spec(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw ParseError("spec " + path.string() + ": " + e.what());
  }
  SynthSpecFile out;
  SyntheticSpec& s = out.base;
  s.length = j.value("length", s.length);
  s.width = j.value("width", s.width);
  s.height = j.value("height", s.height);
  s.fps = j.value("fps", s.fps);
  s.gt_onset = j.value("gt_onset", s.gt_onset);
  s.gt_apex = j.value("gt_apex", s.gt_apex);
  s.gt_offset = j.value("gt_offset", s.gt_offset);
  s.peak_amplitude = j.value("peak_amplitude", s.peak_amplitude);
  s.bump_amplitude = j.value("bump_amplitude", s.bump_amplitude);
  s.bump_center = j.value("bump_center", s.bump_center);
  s.bump_halfwidth = j.value("bump_halfwidth", s.bump_halfwidth);
  s.noise_sigma = j.value("noise_sigma", s.noise_sigma);
  s.sample_id = j.value("sample_id", std::string("synthetic"));
  s.subject_id = j.value("subject_id", s.subject_id);
  s.label = j.value("label", s.label);
  const std::string profile = j.value("profile", std::string("smooth"));
  if (profile == "mixed") {
    out.mixed = true;
    s.profile = Profile::Smooth;
  } else {
    s.profile = profile_from_string(profile);
  }
  if (j.contains("distractor")) {
    DistractorSpec d;
    d.center = j["distractor"].value("center", 0L);
    d.amplitude = j["distractor"].value("amplitude", 0.0);
    s.distractor = d;
  }
  if (j.contains("jitter")) {
    out.jitter.onset = j["jitter"].value("onset", 0L);
    out.jitter.apex = j["jitter"].value("apex", 0L);
    out.jitter.offset = j["jitter"].value("offset", 0L);
  }
  return out;
}

int run_reselect(const fs::path& manifest, double lambda_rise,
                 double lambda_fall, const fs::path& out_dir, int jobs,
                 bool oracle_check) {
  const auto rows = load_manifest(manifest);
  const SearchConfig cfg(lambda_rise, lambda_fall);
  const auto results = reselect_manifest(rows, cfg, jobs);

  if (oracle_check) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const FrameSequence seq = load_sequence(rows[i]);
      const Reannotation expect =
          oracle::brute_force_reselect(seq, rows[i].annotation, cfg);
      if (expect.reselected != results[i].reselected) {
        throw std::logic_error("oracle mismatch on sample " +
                               rows[i].sample_id);
      }
    }
  }

  fs::create_directories(out_dir);
  write_reannotation_csv(out_dir / "reannotation.csv", rows, results);
  return 0;
}

int run_curve(const fs::path& manifest, const std::string& mode_str,
              const fs::path& out_dir) {
  const CurveMode mode = curve_mode_from_string(mode_str);
  const auto rows = load_manifest(manifest);
  fs::create_directories(out_dir);
  for (const auto& d : rows) {
    const FrameSequence seq = load_sequence(d);
    const long ref = (mode == CurveMode::FixedOnset) ? d.annotation.onset : 0;
    const IntensityCurve curve = motion_intensity_curve(seq, mode, ref);
    write_curve_csv(out_dir / ("curve_" + d.sample_id + ".csv"), curve);
  }
  return 0;
}

int run_diffframe(const fs::path& manifest, const std::string& which,
                  bool use_reselected, double lambda, const fs::path& out_dir) {
  const auto rows = load_manifest(manifest);
  fs::create_directories(out_dir);
  for (const auto& d : rows) {
    const FrameSequence seq = load_sequence(d);
    Annotation ann = d.annotation;
    if (use_reselected) {
      ann = reselect(seq, ann, SearchConfig::uniform(lambda)).reselected;
    }
    if (which == "rise" || which == "both") {
      const DifferenceFrame rise =
          difference_frame(seq.frames[ann.apex], seq.frames[ann.onset]);
      write_difference_csv(out_dir / (d.sample_id + "_rise.csv"), rise);
      write_difference_pgm(out_dir / (d.sample_id + "_rise.pgm"), rise);
    }
    if (which == "fall" || which == "both") {
      const DifferenceFrame fall =
          difference_frame(seq.frames[ann.apex], seq.frames[ann.offset]);
      write_difference_csv(out_dir / (d.sample_id + "_fall.csv"), fall);
      write_difference_pgm(out_dir / (d.sample_id + "_fall.pgm"), fall);
    }
  }
  return 0;
}

int run_deviate(const fs::path& manifest, const fs::path& reannotations,
                const fs::path& out_dir) {
  const auto rows = load_manifest(manifest);
  const auto re_rows = read_reannotation_csv(reannotations);
  std::map<std::string, Annotation> re_by_id;
  for (const auto& r : re_rows) re_by_id[r.sample_id] = r.reselected;

  std::vector<std::string> ids;
  std::vector<DeviationRecord> records;
  for (const auto& d : rows) {
    const auto it = re_by_id.find(d.sample_id);
    if (it == re_by_id.end()) {
      throw ParseError("no reannotation for sample " + d.sample_id);
    }
    const long len = static_cast<long>(d.frame_paths.size());
    records.push_back(
        deviation_record(d.annotation, it->second, len, d.fps));
    ids.push_back(d.sample_id);
  }
  fs::create_directories(out_dir);
  write_deviation_csv(out_dir / "deviation.csv", ids, records);
  write_deviation_json(out_dir / "deviation.json", ids, records);
  return 0;
}

int run_sweep(const fs::path& manifest, const std::vector<double>& lambdas,
              const fs::path& out_dir) {
  const auto rows = load_manifest(manifest);
  std::vector<FrameSequence> sequences;
  sequences.reserve(rows.size());
  for (const auto& d : rows) sequences.push_back(load_sequence(d));
  std::vector<SweepSample> corpus;
  for (size_t i = 0; i < rows.size(); ++i) {
    corpus.push_back(SweepSample{&sequences[i], rows[i].annotation,
                                 rows[i].group});
  }
  const SweepReport report = lambda_sweep(corpus, lambdas);
  fs::create_directories(out_dir);
  write_sweep_csv(out_dir / "sweep.csv", report);
  write_sweep_json(out_dir / "sweep.json", report);
  return 0;
}

int run_synth(const fs::path& spec_path, long count, std::uint64_t seed,
              const fs::path& out_dir) {
  const SynthSpecFile spec = parse_synth_spec(spec_path);
  write_synth_corpus(spec.base, count, seed, out_dir, spec.jitter, spec.mixed);
  return 0;
}

int run_eval(const fs::path& predictions, bool as_printed,
             const fs::path& out_dir) {
  const auto rows = csv::parse(read_text(predictions));
  if (rows.empty() ||
      csv::join_row(rows.front()) != "sample_id,true_label,predicted_label") {
    throw ParseError("predictions file: expected header "
                     "sample_id,true_label,predicted_label");
  }
  std::set<std::string> classes;
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 3) {
      throw ParseError("predictions row " + std::to_string(r) +
                       ": expected 3 fields");
    }
    classes.insert(rows[r][1]);
    classes.insert(rows[r][2]);
  }
  ConfusionMatrix cm(std::vector<std::string>(classes.begin(), classes.end()));
  for (size_t r = 1; r < rows.size(); ++r) {
    cm.accumulate(rows[r][1], rows[r][2]);
  }

  json per_class = json::object();
  for (long i = 0; i < cm.size(); ++i) {
    const long tp = cm.true_positives(i);
    const long denom = 2 * tp + cm.false_positives(i) + cm.false_negatives(i);
    const double f1 = denom > 0 ? 2.0 * tp / denom : 0.0;
    const double recall =
        cm.support(i) > 0 ? static_cast<double>(tp) / cm.support(i) : 0.0;
    per_class[cm.class_names()[i]] = json{{"f1", f1}, {"recall", recall}};
  }
  json out{{"acc", accuracy(cm)},
           {"uf1", as_printed ? uf1_as_printed(cm) : uf1(cm)},
           {"uar", uar(cm)},
           {"per_class", per_class}};
  fs::create_directories(out_dir);
  write_file_atomic(out_dir / "metrics.json", out.dump(2) + "\n");
  return 0;
}

int run_eval_loso(const fs::path& manifest, const fs::path& out_dir) {
  const auto rows = load_manifest(manifest);
  std::vector<std::pair<std::string, std::string>> samples;
  for (const auto& d : rows) samples.emplace_back(d.sample_id, d.subject_id);
  const auto splits = loso_splits(samples);

  std::ostringstream out;
  out << "fold,held_out_subject,sample_id,role\n";
  for (size_t f = 0; f < splits.size(); ++f) {
    for (const auto& id : splits[f].test_ids) {
      out << f << "," << csv::escape(splits[f].held_out_subject) << ","
          << csv::escape(id) << ",test\n";
    }
    for (const auto& id : splits[f].train_ids) {
      out << f << "," << csv::escape(splits[f].held_out_subject) << ","
          << csv::escape(id) << ",train\n";
    }
  }
  fs::create_directories(out_dir);
  write_file_atomic(out_dir / "loso_splits.csv", out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Micro-expression keyframe re-selection and annotation audit"};
  app.require_subcommand(1);

  // reselect
  std::string manifest, out_dir;
  double lambda_rise = 0.1, lambda_fall = 0.1, lambda_both = -1.0;
  int jobs = 1;
  bool oracle_check = false;
  auto* sc_reselect = app.add_subcommand(
      "reselect", "Re-select keyframes by windowed L2 maximization");
  sc_reselect->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_reselect->add_option("--lambda-rise", lambda_rise, "Rise range factor");
  sc_reselect->add_option("--lambda-fall", lambda_fall, "Fall range factor");
  sc_reselect->add_option("--lambda", lambda_both,
                          "Sets both range factors at once");
  sc_reselect->add_option("--out", out_dir, "Output directory")->required();
  sc_reselect->add_option("--jobs", jobs, "Worker threads");
  sc_reselect->add_flag("--oracle-check", oracle_check,
                        "Cross-check against the brute-force search");

  // curve
  std::string curve_mode = "fixed-onset";
  auto* sc_curve =
      app.add_subcommand("curve", "Export motion-intensity curves");
  sc_curve->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_curve->add_option("--mode", curve_mode,
                       "fixed-onset | fixed-first | consecutive");
  sc_curve->add_option("--out", out_dir, "Output directory")->required();

  // diffframe
  std::string which = "both";
  bool use_reselected = false;
  double diff_lambda = 0.1;
  auto* sc_diff =
      app.add_subcommand("diffframe", "Export rise/fall difference frames");
  sc_diff->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_diff->add_option("--which", which, "rise | fall | both");
  sc_diff->add_flag("--use-reselected", use_reselected,
                    "Diff re-selected keyframes instead of the originals");
  sc_diff->add_option("--lambda", diff_lambda,
                      "Range factor when --use-reselected is set");
  sc_diff->add_option("--out", out_dir, "Output directory")->required();

  // deviate
  std::string reann_path;
  auto* sc_dev = app.add_subcommand(
      "deviate", "Deviation between original and re-selected annotations");
  sc_dev->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_dev->add_option("--reannotations", reann_path, "reannotation.csv")
      ->required();
  sc_dev->add_option("--out", out_dir, "Output directory")->required();

  // sweep
  std::vector<double> lambdas{0.05, 0.10, 0.15, 0.20};
  auto* sc_sweep =
      app.add_subcommand("sweep", "Deviation sweep over lambda values");
  sc_sweep->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_sweep->add_option("--lambdas", lambdas, "Comma-separated lambda list")
      ->delimiter(',');
  sc_sweep->add_option("--out", out_dir, "Output directory")->required();

  // synth
  std::string spec_path;
  long count = 1;
  std::uint64_t seed = 1;
  auto* sc_synth =
      app.add_subcommand("synth", "Generate a synthetic PGM corpus");
  sc_synth->add_option("--spec", spec_path, "Spec JSON")->required();
  sc_synth->add_option("--count", count, "Number of samples");
  sc_synth->add_option("--seed", seed, "Corpus seed");
  sc_synth->add_option("--out", out_dir, "Output directory")->required();

  // eval (+ loso)
  std::string predictions;
  bool uf1_printed = false;
  auto* sc_eval =
      app.add_subcommand("eval", "Classification metrics from predictions");
  sc_eval->add_option("--predictions", predictions,
                      "CSV: sample_id,true_label,predicted_label");
  sc_eval->add_flag("--uf1-as-printed", uf1_printed,
                    "Use denominator TP+FP+FN instead of 2TP+FP+FN");
  sc_eval->add_option("--out", out_dir, "Output directory");
  auto* sc_loso =
      sc_eval->add_subcommand("loso", "Leave-one-subject-out splits");
  sc_loso->add_option("--manifest", manifest, "Manifest CSV")->required();
  sc_loso->add_option("--out", out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sc_reselect) {
      if (lambda_both >= 0.0) lambda_rise = lambda_fall = lambda_both;
      return run_reselect(manifest, lambda_rise, lambda_fall, out_dir, jobs,
                          oracle_check);
    }
    if (*sc_curve) return run_curve(manifest, curve_mode, out_dir);
    if (*sc_diff) {
      if (which != "rise" && which != "fall" && which != "both") {
        throw ParseError("--which must be rise, fall or both");
      }
      return run_diffframe(manifest, which, use_reselected, diff_lambda,
                           out_dir);
    }
    if (*sc_dev) return run_deviate(manifest, reann_path, out_dir);
    if (*sc_sweep) return run_sweep(manifest, lambdas, out_dir);
    if (*sc_synth) return run_synth(spec_path, count, seed, out_dir);
    if (*sc_eval) {
      if (*sc_loso) return run_eval_loso(manifest, out_dir);
      if (predictions.empty() || out_dir.empty()) {
        throw ParseError("eval requires --predictions and --out");
      }
      return run_eval(predictions, uf1_printed, out_dir);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
