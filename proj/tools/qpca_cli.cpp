// Copyright 2026 The qpca Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: train projection models, sweep recognition and
// reconstruction curves, inject noise, and inspect model files.
//
// Exit codes: 0 ok, 2 parameter error, 3 I/O or file-format error,
// 4 convergence/degeneracy warning escalated by --strict.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpca/qpca.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;

double parse_p(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") {
    return qpca::kInfinity;
  }
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw qpca::ParamError("cannot parse --p value '" + text +
                           "' (expected a positive real or 'inf')");
  }
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct CommonSolverFlags {
  double s = 2.0;
  std::string p_text = "2";
  double tol = 1e-4;
  int max_iter = 200;
  double eps_perturb = 1e-8;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s", s, "Objective norm order s (s >= 1)");
    cmd->add_option("--p", p_text,
                    "Constraint norm order p (> 0, or 'inf')");
    cmd->add_option("--tol", tol, "Relative stopping tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "Iteration cap per direction")
        ->capture_default_str();
    cmd->add_option("--eps-perturb", eps_perturb,
                    "Zero-entry perturbation magnitude (0 < p < 1)")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  }

  qpca::SolverConfig config(int r) const {
    qpca::SolverConfig cfg;
    cfg.s = s;
    cfg.p = parse_p(p_text);
    cfg.r = r;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.eps_perturb = eps_perturb;
    cfg.seed = seed;
    return cfg;
  }
};

void report_directions(const qpca::Model& model, bool* warn) {
  std::printf("trained %lld direction(s) on %lldx%lld images\n",
              static_cast<long long>(model.rank()),
              static_cast<long long>(model.rows()),
              static_cast<long long>(model.cols()));
  for (Eigen::Index t = 0; t < model.rank(); ++t) {
    const auto ut = static_cast<size_t>(t);
    const int iters =
        ut < model.solver_iters.size() ? model.solver_iters[ut] : -1;
    const bool converged =
        ut < model.solver_converged.size() ? model.solver_converged[ut] : true;
    std::printf("  direction %lld: iters=%d converged=%s weight=%s "
                "weight_norm=%s\n",
                static_cast<long long>(t + 1), iters, converged ? "yes" : "no",
                format_value(model.weights_raw[t]).c_str(),
                format_value(model.weights_norm[t]).c_str());
    if (!converged) {
      std::fprintf(stderr,
                   "warning: direction %lld hit max_iter without meeting the "
                   "stopping rule\n",
                   static_cast<long long>(t + 1));
      *warn = true;
    }
  }
  if (model.truncated) {
    std::fprintf(stderr,
                 "warning: solver stopped early after repeated degenerate "
                 "directions (%lld of %d found)\n",
                 static_cast<long long>(model.rank()), model.config.r);
    *warn = true;
  }
}

// ---------------------------------------------------------------- train ---

struct TrainArgs {
  std::string manifest;
  std::string out;
  int r = 1;
  bool strict = false;
  CommonSolverFlags common;
};

int run_train(const TrainArgs& args) {
  const qpca::Dataset dataset = qpca::load_dataset(args.manifest);
  const qpca::SolverConfig cfg = args.common.config(args.r);
  cfg.validate(dataset.cols());

  const qpca::Model model = qpca::train(dataset, cfg);
  bool warn = false;
  report_directions(model, &warn);

  qpca::save_model(model, args.out);
  std::printf("model written to %s\n", args.out.c_str());
  return (warn && args.strict) ? kExitDegenerate : kExitOk;
}

// ------------------------------------------------------------- evaluate ---

struct EvaluateArgs {
  std::string manifest;
  std::string out_dir = ".";
  std::vector<std::string> sp_pairs;  // "s,p" entries
  int r_min = 1;
  int r_max = 1;
  int r_step = 1;
  int repetitions = 3;
  double train_fraction = 0.9;
  std::string noise_kind = "none";
  double noise_fraction = 0.2;
  double noise_density = 0.05;
  bool independent_splits = false;
  bool strict = false;
  CommonSolverFlags common;
};

struct SpPair {
  double s;
  double p;
};

std::vector<SpPair> parse_sp_list(const EvaluateArgs& args) {
  std::vector<SpPair> pairs;
  for (const std::string& entry : args.sp_pairs) {
    const auto comma = entry.find(',');
    if (comma == std::string::npos) {
      throw qpca::ParamError("--sp expects 's,p' but got '" + entry + "'");
    }
    SpPair pair{};
    try {
      pair.s = std::stod(entry.substr(0, comma));
    } catch (const std::exception&) {
      throw qpca::ParamError("cannot parse s in --sp '" + entry + "'");
    }
    pair.p = parse_p(entry.substr(comma + 1));
    pairs.push_back(pair);
  }
  if (pairs.empty()) {
    pairs.push_back({args.common.s, parse_p(args.common.p_text)});
  }
  return pairs;
}

qpca::NoiseKind parse_noise_kind(const std::string& kind) {
  if (kind == "block") return qpca::NoiseKind::kBlock;
  if (kind == "saltpepper") return qpca::NoiseKind::kSaltPepper;
  throw qpca::ParamError("unknown noise kind '" + kind +
                         "' (expected block or saltpepper)");
}

int run_evaluate(const EvaluateArgs& args) {
  if (args.r_min < 1 || args.r_max < args.r_min || args.r_step < 1) {
    throw qpca::ParamError("evaluate: need 1 <= --r-min <= --r-max, --r-step >= 1");
  }
  if (args.repetitions < 1) {
    throw qpca::ParamError("evaluate: --reps must be positive");
  }
  const std::vector<SpPair> pairs = parse_sp_list(args);
  const qpca::Dataset dataset = qpca::load_dataset(args.manifest);
  const bool with_noise = args.noise_kind != "none";
  const qpca::NoiseKind noise_kind =
      with_noise ? parse_noise_kind(args.noise_kind) : qpca::NoiseKind::kBlock;

  std::vector<int> r_values;
  for (int r = args.r_min; r <= args.r_max; r += args.r_step) {
    r_values.push_back(r);
  }

  bool warn = false;
  // accuracies[pair][weighted][r][rep]
  std::map<std::tuple<size_t, int, int, int>, double> cells;

  for (int rep = 0; rep < args.repetitions; ++rep) {
    const std::uint64_t rep_seed = args.common.seed + static_cast<std::uint64_t>(rep);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      const std::uint64_t split_seed =
          args.independent_splits ? qpca::derive_seed(rep_seed, pi + 1)
                                  : rep_seed;
      qpca::SplitResult parts =
          qpca::split(dataset, args.train_fraction, split_seed);
      if (parts.test.empty()) {
        throw qpca::ParamError(
            "evaluate: test split is empty (coverage rule); lower "
            "--train-fraction or add samples");
      }
      if (with_noise) {
        // Separate stream: the split already consumed this seed's sequence.
        parts.train = qpca::pollute_fraction(parts.train, args.noise_fraction,
                                             noise_kind,
                                             qpca::derive_seed(split_seed, 0),
                                             args.noise_density);
      }

      qpca::SolverConfig cfg = args.common.config(args.r_max);
      cfg.s = pairs[pi].s;
      cfg.p = pairs[pi].p;
      cfg.seed = split_seed;
      const qpca::Model full = qpca::train(parts.train, cfg);
      if (full.truncated) warn = true;

      for (const int r : r_values) {
        if (r > full.rank()) {
          throw qpca::ParamError(
              "evaluate: requested r exceeds the trained rank " +
              std::to_string(full.rank()));
        }
        const qpca::Model model = qpca::truncated(full, r);
        for (const int weighted : {0, 1}) {
          const double accuracy = qpca::evaluate_accuracy(
              model, parts.train, parts.test, weighted == 1);
          cells[{pi, weighted, r, rep}] = accuracy;
        }
      }
    }
  }

  fs::create_directories(args.out_dir);
  const fs::path csv_path = fs::path(args.out_dir) / "accuracy.csv";
  std::ofstream csv(csv_path, std::ios::trunc);
  if (!csv) {
    throw qpca::IoError("cannot write " + csv_path.string());
  }
  csv << "s,p,weighted,r,repetition,seed,accuracy,mean_accuracy\n";
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    for (const int weighted : {0, 1}) {
      for (const int r : r_values) {
        double mean = 0.0;
        for (int rep = 0; rep < args.repetitions; ++rep) {
          mean += cells.at({pi, weighted, r, rep});
        }
        mean /= args.repetitions;
        for (int rep = 0; rep < args.repetitions; ++rep) {
          const std::uint64_t rep_seed =
              args.common.seed + static_cast<std::uint64_t>(rep);
          const std::uint64_t split_seed =
              args.independent_splits ? qpca::derive_seed(rep_seed, pi + 1)
                                      : rep_seed;
          csv << format_value(pairs[pi].s) << ',' << format_value(pairs[pi].p)
              << ',' << weighted << ',' << r << ',' << rep << ',' << split_seed
              << ',' << format_value(cells.at({pi, weighted, r, rep})) << ','
              << format_value(mean) << '\n';
        }
        std::printf("s=%s p=%s %s r=%d mean_accuracy=%s\n",
                    format_value(pairs[pi].s).c_str(),
                    format_value(pairs[pi].p).c_str(),
                    weighted ? "weighted" : "unweighted", r,
                    format_value(mean).c_str());
      }
    }
  }
  csv.close();
  std::printf("curves written to %s\n", csv_path.string().c_str());
  return (warn && args.strict) ? kExitDegenerate : kExitOk;
}

// ------------------------------------------------------------- classify ---

struct ClassifyArgs {
  std::string model_path;
  std::string gallery;
  std::vector<std::string> images;
  bool weighted = true;
};

int run_classify(const ClassifyArgs& args) {
  const qpca::Model model = qpca::load_model(args.model_path);
  const qpca::Dataset gallery = qpca::load_dataset(args.gallery);
  const auto gallery_features =
      qpca::project_gallery(model, gallery, args.weighted);
  for (const std::string& image_path : args.images) {
    const qpca::QMatrix image = qpca::load_image(image_path);
    const qpca::Prediction prediction =
        qpca::classify(model, gallery_features, image, args.weighted);
    std::printf("%s\t%s\tdistance=%s\n", image_path.c_str(),
                prediction.label.c_str(),
                format_value(prediction.distance).c_str());
  }
  return kExitOk;
}

// ---------------------------------------------------------- reconstruct ---

struct ReconstructArgs {
  std::string model_path;
  std::string image;
  std::string out;
  int r_used = -1;  // default: full rank
};

int run_reconstruct(const ReconstructArgs& args) {
  const qpca::Model model = qpca::load_model(args.model_path);
  const qpca::QMatrix image = qpca::load_image(args.image);
  const Eigen::Index r_used =
      args.r_used < 0 ? model.rank() : static_cast<Eigen::Index>(args.r_used);
  const qpca::QMatrix rec = qpca::reconstruct(model, image, r_used);
  qpca::save_image(args.out, rec);
  std::printf("reconstruction (r=%lld) written to %s\n",
              static_cast<long long>(r_used), args.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------- recon-curve ---

struct ReconCurveArgs {
  std::string model_path;
  std::string manifest;
  std::string out_dir = ".";
  int r_min = 0;
  int r_max = -1;  // default: full rank
};

int run_recon_curve(const ReconCurveArgs& args) {
  const qpca::Model model = qpca::load_model(args.model_path);
  const qpca::Dataset clean = qpca::load_dataset(args.manifest);
  std::vector<qpca::QMatrix> images;
  for (const qpca::Sample& sample : clean) images.push_back(sample.image);

  const int r_max =
      args.r_max < 0 ? static_cast<int>(model.rank()) : args.r_max;
  if (args.r_min < 0 || r_max < args.r_min || r_max > model.rank()) {
    throw qpca::ParamError("recon-curve: bad r range");
  }

  fs::create_directories(args.out_dir);
  const fs::path csv_path = fs::path(args.out_dir) / "recon_error.csv";
  std::ofstream csv(csv_path, std::ios::trunc);
  if (!csv) {
    throw qpca::IoError("cannot write " + csv_path.string());
  }
  csv << "s,p,r,error\n";
  for (int r = args.r_min; r <= r_max; ++r) {
    const double err = qpca::reconstruction_error(model, images, r);
    csv << format_value(model.config.s) << ',' << format_value(model.config.p)
        << ',' << r << ',' << format_value(err) << '\n';
    std::printf("r=%d error=%s\n", r, format_value(err).c_str());
  }
  std::printf("curve written to %s\n", csv_path.string().c_str());
  return kExitOk;
}

// ---------------------------------------------------------------- noise ---

struct NoiseArgs {
  std::string manifest;
  std::string out_dir;
  std::string kind = "saltpepper";
  double fraction = 0.2;
  double density = 0.05;
  std::uint64_t seed = 0;
};

int run_noise(const NoiseArgs& args) {
  const qpca::NoiseKind kind = parse_noise_kind(args.kind);
  const qpca::Dataset dataset = qpca::load_dataset(args.manifest);
  const qpca::Dataset polluted =
      qpca::pollute_fraction(dataset, args.fraction, kind, args.seed,
                             args.density);

  fs::create_directories(args.out_dir);
  const fs::path out_manifest = fs::path(args.out_dir) / "manifest.tsv";
  std::ofstream manifest(out_manifest, std::ios::trunc);
  if (!manifest) {
    throw qpca::IoError("cannot write " + out_manifest.string());
  }
  size_t corrupted = 0;
  for (size_t i = 0; i < polluted.size(); ++i) {
    const qpca::Sample& sample = polluted[i];
    const fs::path source(sample.source_path);
    std::string ext = source.extension().string();
    if (ext != ".png" && ext != ".ppm") ext = ".ppm";
    char prefix[16];
    std::snprintf(prefix, sizeof(prefix), "%04zu_", i);
    const std::string name = prefix + source.stem().string() + ext;
    const fs::path target = fs::path(args.out_dir) / name;
    if (sample.noisy) {
      qpca::save_image(target, sample.image);
      ++corrupted;
    } else {
      fs::copy_file(source, target, fs::copy_options::overwrite_existing);
    }
    manifest << sample.label << '\t' << name << '\n';
  }
  std::printf("corrupted %zu of %zu images; manifest written to %s\n",
              corrupted, polluted.size(), out_manifest.string().c_str());
  return kExitOk;
}

// ------------------------------------------------------------ model-info ---

int run_model_info(const std::string& model_path) {
  const qpca::Model model = qpca::load_model(model_path);
  std::printf("image size: %lldx%lld\n", static_cast<long long>(model.rows()),
              static_cast<long long>(model.cols()));
  std::printf("directions: %lld (requested %d)\n",
              static_cast<long long>(model.rank()), model.config.r);
  std::printf("s=%s p=%s tol=%s max_iter=%d seed=%llu eps_perturb=%s\n",
              format_value(model.config.s).c_str(),
              format_value(model.config.p).c_str(),
              format_value(model.config.tol).c_str(), model.config.max_iter,
              static_cast<unsigned long long>(model.config.seed),
              format_value(model.config.eps_perturb).c_str());
  std::printf("truncated: %s\n", model.truncated ? "yes" : "no");
  for (Eigen::Index t = 0; t < model.rank(); ++t) {
    std::printf("  direction %lld: weight=%s weight_norm=%s\n",
                static_cast<long long>(t + 1),
                format_value(model.weights_raw[t]).c_str(),
                format_value(model.weights_norm[t]).c_str());
  }
  std::printf("labels (%zu):", model.label_space.size());
  for (const std::string& label : model.label_space) {
    std::printf(" %s", label.c_str());
  }
  std::printf("\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qpca: L_p-norm two-dimensional quaternion PCA for color images"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train_cmd =
      app.add_subcommand("train", "Train a projection model from a manifest");
  train_cmd->add_option("--manifest", train_args.manifest, "Dataset manifest")
      ->required();
  train_cmd->add_option("--r", train_args.r, "Number of projection directions")
      ->required();
  train_cmd->add_option("--out", train_args.out, "Output model file")
      ->required();
  train_cmd->add_flag("--strict", train_args.strict,
                      "Exit 4 on degenerate directions");
  train_args.common.attach(train_cmd);

  EvaluateArgs eval_args;
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "Accuracy curves over r for weighted and unweighted 1NN");
  eval_cmd->add_option("--manifest", eval_args.manifest, "Dataset manifest")
      ->required();
  eval_cmd->add_option("--out-dir", eval_args.out_dir,
                       "Directory for accuracy.csv")
      ->capture_default_str();
  eval_cmd->add_option("--sp", eval_args.sp_pairs,
                       "Parameter pair 's,p' (repeatable; p may be 'inf')");
  eval_cmd->add_option("--r-min", eval_args.r_min, "Smallest r")
      ->capture_default_str();
  eval_cmd->add_option("--r-max", eval_args.r_max, "Largest r")->required();
  eval_cmd->add_option("--r-step", eval_args.r_step, "r stride")
      ->capture_default_str();
  eval_cmd->add_option("--reps", eval_args.repetitions,
                       "Seeded split/train/evaluate repetitions")
      ->capture_default_str();
  eval_cmd
      ->add_option("--train-fraction", eval_args.train_fraction,
                   "Training fraction of the split")
      ->capture_default_str();
  eval_cmd
      ->add_option("--noise-kind", eval_args.noise_kind,
                   "none, block or saltpepper (training side only)")
      ->capture_default_str();
  eval_cmd
      ->add_option("--noise-fraction", eval_args.noise_fraction,
                   "Fraction of training images to pollute")
      ->capture_default_str();
  eval_cmd
      ->add_option("--noise-density", eval_args.noise_density,
                   "Salt-and-pepper density")
      ->capture_default_str();
  eval_cmd->add_flag("--independent-splits", eval_args.independent_splits,
                     "Draw a fresh split per (s,p) cell instead of sharing");
  eval_cmd->add_flag("--strict", eval_args.strict,
                     "Exit 4 on degenerate directions");
  eval_args.common.attach(eval_cmd);

  ClassifyArgs classify_args;
  auto* classify_cmd =
      app.add_subcommand("classify", "1NN-classify images against a gallery");
  classify_cmd
      ->add_option("--model", classify_args.model_path, "Trained model file")
      ->required();
  classify_cmd
      ->add_option("--gallery", classify_args.gallery, "Gallery manifest")
      ->required();
  classify_cmd->add_option("--image", classify_args.images,
                           "Image(s) to classify")
      ->required();
  classify_cmd->add_flag("--weighted,!--unweighted", classify_args.weighted,
                         "Weighted projection (default on)");

  ReconstructArgs rec_args;
  auto* rec_cmd =
      app.add_subcommand("reconstruct", "Reconstruct an image from the basis");
  rec_cmd->add_option("--model", rec_args.model_path, "Trained model file")
      ->required();
  rec_cmd->add_option("--image", rec_args.image, "Image to reconstruct")
      ->required();
  rec_cmd->add_option("--out", rec_args.out, "Output image (.png or .ppm)")
      ->required();
  rec_cmd->add_option("--r-used", rec_args.r_used,
                      "Directions to use (default: all)");

  ReconCurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand(
      "recon-curve", "Reconstruction error as a function of r");
  curve_cmd->add_option("--model", curve_args.model_path, "Trained model file")
      ->required();
  curve_cmd
      ->add_option("--manifest", curve_args.manifest, "Clean sample manifest")
      ->required();
  curve_cmd->add_option("--out-dir", curve_args.out_dir,
                        "Directory for recon_error.csv")
      ->capture_default_str();
  curve_cmd->add_option("--r-min", curve_args.r_min, "Smallest r")
      ->capture_default_str();
  curve_cmd->add_option("--r-max", curve_args.r_max, "Largest r (default: all)");

  NoiseArgs noise_args;
  auto* noise_cmd = app.add_subcommand(
      "noise", "Write a polluted copy of a dataset plus a new manifest");
  noise_cmd->add_option("--manifest", noise_args.manifest, "Dataset manifest")
      ->required();
  noise_cmd->add_option("--out-dir", noise_args.out_dir, "Output directory")
      ->required();
  noise_cmd->add_option("--kind", noise_args.kind, "block or saltpepper")
      ->capture_default_str();
  noise_cmd
      ->add_option("--fraction", noise_args.fraction,
                   "Fraction of images to pollute")
      ->capture_default_str();
  noise_cmd->add_option("--density", noise_args.density,
                        "Salt-and-pepper density")
      ->capture_default_str();
  noise_cmd->add_option("--seed", noise_args.seed, "Seed")
      ->capture_default_str();

  std::string info_model;
  auto* info_cmd =
      app.add_subcommand("model-info", "Print the header of a model file");
  info_cmd->add_option("--model", info_model, "Model file")->required();

  try {
    app.parse(argc, argv);
    if (train_cmd->parsed()) return run_train(train_args);
    if (eval_cmd->parsed()) return run_evaluate(eval_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (rec_cmd->parsed()) return run_reconstruct(rec_args);
    if (curve_cmd->parsed()) return run_recon_curve(curve_args);
    if (noise_cmd->parsed()) return run_noise(noise_args);
    if (info_cmd->parsed()) return run_model_info(info_model);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParam;
  } catch (const qpca::ParamError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return kExitParam;
  } catch (const qpca::IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const qpca::FormatError& e) {
    std::fprintf(stderr, "format error: %s\n", e.what());
    return kExitIo;
  } catch (const qpca::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParam;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
