// lrp: command-line front end for Local Radon Pattern descriptors.
//
// Exit codes: 0 success, 1 validation error, 2 data error, 3 verification
// failure.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lrp/dataset.hpp"
#include "lrp/descriptor.hpp"
#include "lrp/evaluation.hpp"
#include "lrp/imaging_io.hpp"
#include "lrp/oracle.hpp"
#include "lrp/pipeline.hpp"
#include "lrp/search_index.hpp"

namespace fs = std::filesystem;
using namespace lrp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string method = "median";
  std::string distance = "l1";
  std::string resize = "auto";
  bool no_normalize = false;
  int threads = 0;
  std::uint64_t seed = 1;
  std::size_t k = 10;

  // paths
  std::vector<std::string> inputs;
  std::string out;
  std::string dataset;
  std::string kind = "loo";
  std::string index;
  std::string query;
  std::string cache;
  std::string report;
  std::string trace;
  std::string label;
  bool strict = false;

  // verify / bench / synth
  std::size_t trials = 1000;
  bool inject_fault = false;
  std::size_t size = 1000;
  std::size_t reps = 20;
  std::size_t classes = 3;
  std::size_t per_class = 10;
};

std::vector<Method> methods_of(const std::string &s) {
  if (s == "both") return {Method::Median, Method::MinMax};
  try {
    return {parse_method(s)};
  } catch (const Error &e) {
    throw ValidationError(e.what());
  }
}

std::vector<DistanceKind> distances_of(const std::string &s) {
  if (s == "all") return {kDistanceKinds.begin(), kDistanceKinds.end()};
  try {
    return {parse_distance(s)};
  } catch (const Error &e) {
    throw ValidationError(e.what());
  }
}

DatasetKind kind_of(const std::string &s) {
  try {
    return parse_dataset_kind(s);
  } catch (const Error &e) {
    throw ValidationError(e.what());
  }
}

// "auto" means 250x250 for patch-to-scan data and native size otherwise.
ResizePolicy resize_of(const std::string &s, DatasetKind kind) {
  if (s == "auto") return kind == DatasetKind::PatchToScan ? ResizePolicy::to(250, 250) : ResizePolicy::native();
  try {
    return parse_resize(s);
  } catch (const Error &e) {
    throw ValidationError(e.what());
  }
}

std::string resize_tag(const ResizePolicy &p) {
  return p.target ? std::to_string(p.target->width) + "x" + std::to_string(p.target->height) : "native";
}

std::vector<fs::path> expand_inputs(const std::vector<std::string> &inputs) {
  std::vector<fs::path> files;
  for (const auto &in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto &e : fs::recursive_directory_iterator(p))
        if (e.is_regular_file() && is_image_file(e.path())) found.push_back(e.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

void print_failures(const std::vector<ExtractOutcome> &outcomes) {
  for (const auto &o : outcomes)
    if (!o.ok()) std::cerr << "error: " << o.path.string() << ": " << o.error << '\n';
}

int cmd_extract(const Config &cfg) {
  const auto method = methods_of(cfg.method);
  if (method.size() != 1) throw ValidationError("extract takes a single --method");
  const auto files = expand_inputs(cfg.inputs);
  if (files.empty()) throw ValidationError("no input images");

  ExtractOptions opts;
  opts.resize = resize_of(cfg.resize, DatasetKind::LeaveOneOut);
  opts.normalize = !cfg.no_normalize;
  if (!cfg.cache.empty()) opts.cache_dir = cfg.cache;
  const auto outcomes = extract_all(files, method, opts);

  std::vector<IndexedDescriptor> entries;
  std::size_t failed = 0;
  for (const auto &o : outcomes) {
    if (!o.ok()) {
      ++failed;
      continue;
    }
    const std::string label = cfg.label.empty() ? o.path.parent_path().filename().string() : cfg.label;
    entries.push_back({o.path.generic_string(), label, o.get(method[0])});
  }
  print_failures(outcomes);
  if (!entries.empty()) {
    auto store = SearchIndex::build(std::move(entries), method[0], distances_of(cfg.distance).front());
    store.attributes()["resize"] = resize_tag(opts.resize);
    store.save(cfg.out);
  }
  std::cout << "extracted " << (files.size() - failed) << " of " << files.size() << " descriptors ("
            << to_string(method[0]) << ") into " << cfg.out << '\n';
  return failed == 0 ? kExitOk : kExitData;
}

int cmd_index(const Config &cfg) {
  const auto method = methods_of(cfg.method);
  const auto dist = distances_of(cfg.distance);
  if (method.size() != 1 || dist.size() != 1) throw ValidationError("index takes a single --method and --distance");
  const auto kind = kind_of(cfg.kind);
  const auto manifest = load_manifest(cfg.dataset, kind);
  const Split split = kind == DatasetKind::PatchToScan ? Split::Train : Split::All;

  std::vector<fs::path> files;
  std::vector<const ManifestItem *> items = manifest.with_split(split);
  for (const auto *it : items) files.push_back(fs::path(cfg.dataset) / it->path);

  ExtractOptions opts;
  opts.resize = resize_of(cfg.resize, kind);
  opts.normalize = !cfg.no_normalize;
  if (!cfg.cache.empty()) opts.cache_dir = cfg.cache;
  const auto outcomes = extract_all(files, method, opts);
  print_failures(outcomes);

  std::vector<IndexedDescriptor> entries;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (outcomes[i].ok()) entries.push_back({items[i]->path, items[i]->label, outcomes[i].get(method[0])});
  if (entries.size() != items.size()) return kExitData;

  auto index = SearchIndex::build(std::move(entries), method[0], dist[0]);
  index.attributes()["resize"] = resize_tag(opts.resize);
  index.save(cfg.out);
  std::cout << "indexed " << index.size() << " images (" << to_string(method[0]) << ", " << to_string(dist[0])
            << ") into " << cfg.out << '\n';
  return kExitOk;
}

int cmd_search(const Config &cfg) {
  if (cfg.k == 0) throw ValidationError("-k must be at least 1");
  const auto index = SearchIndex::load(cfg.index);

  ResizePolicy resize = ResizePolicy::native();
  if (cfg.resize != "auto") {
    resize = resize_of(cfg.resize, DatasetKind::LeaveOneOut);
  } else if (auto it = index.attributes().find("resize"); it != index.attributes().end()) {
    resize = parse_resize(it->second);
  }
  const DistanceKind kind = cfg.distance == "index" ? index.kind() : distances_of(cfg.distance).front();

  const auto query_method = cfg.method == "index" ? index.method() : methods_of(cfg.method).front();
  const GrayImage image = load_gray(cfg.query, resize);
  const LrpDescriptor q = descriptor(image, query_method, !cfg.no_normalize);
  const auto result = index.top_k(q, cfg.k, kind, cfg.query);

  std::cout << "rank\tid\tlabel\tdistance\n";
  char dist[64];
  for (std::size_t i = 0; i < result.ranked.size(); ++i) {
    const auto &n = result.ranked[i];
    std::snprintf(dist, sizeof dist, "%.17g", n.distance);
    std::cout << (i + 1) << '\t' << n.id << '\t' << n.label << '\t' << dist << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const Config &cfg) {
  const auto methods = methods_of(cfg.method);
  const auto dists = distances_of(cfg.distance);
  const auto kind = kind_of(cfg.kind);
  const auto manifest = load_manifest(cfg.dataset, kind);
  for (const auto &f : check_known_layout(manifest)) {
    std::cerr << (cfg.strict ? "error: " : "warning: ") << f << '\n';
    if (cfg.strict) throw LayoutMismatch(f);
  }

  std::vector<fs::path> files;
  for (const auto &it : manifest.items) files.push_back(fs::path(cfg.dataset) / it.path);
  ExtractOptions opts;
  opts.resize = resize_of(cfg.resize, kind);
  opts.normalize = !cfg.no_normalize;
  if (!cfg.cache.empty()) opts.cache_dir = cfg.cache;
  const auto outcomes = extract_all(files, methods, opts);
  print_failures(outcomes);
  if (std::any_of(outcomes.begin(), outcomes.end(), [](const auto &o) { return !o.ok(); })) return kExitData;

  EvaluationReport report;
  report.dataset = manifest.name;
  report.kind = kind;
  for (Method m : methods) {
    std::vector<LrpDescriptor> descriptors;
    descriptors.reserve(outcomes.size());
    for (const auto &o : outcomes) descriptors.push_back(o.get(m));
    for (DistanceKind d : dists) report.cells.push_back(evaluate_cell(manifest, descriptors, m, d));
  }

  print_table(std::cout, report);
  std::cout << '\n';
  print_key_values(std::cout, report);
  if (!cfg.report.empty()) {
    std::ofstream out(cfg.report);
    print_key_values(out, report);
  }
  if (!cfg.trace.empty()) {
    std::ofstream out(cfg.trace);
    print_trace(out, report);
  }
  return kExitOk;
}

int cmd_verify(const Config &cfg) {
  if (cfg.trials == 0) {
    std::cerr << "warning: trials=0, nothing verified\n";
    std::cout << "verify: PASS (0 trials)\n";
    return kExitOk;
  }
  const auto report = oracle::check_equivalence(cfg.seed, cfg.trials, 3, 64, cfg.inject_fault);
  if (report.passed()) {
    std::cout << "verify: PASS (" << report.trials << " trials, seed " << cfg.seed << ")\n";
    return kExitOk;
  }
  std::cout << "verify: FAIL (" << report.mismatches << " of " << report.trials << " trials differ; first: "
            << report.first_failure << ")\n";
  return kExitVerify;
}

int cmd_bench(const Config &cfg) {
  if (cfg.size < 3) throw ValidationError("--size must be at least 3");
  if (cfg.reps == 0) throw ValidationError("--reps must be at least 1");
  std::mt19937_64 rng(cfg.seed);
  GrayImage image(cfg.size, cfg.size);
  for (auto &p : image.pixels()) p = static_cast<std::uint8_t>(rng() & 0xff);

  std::cout << "bench size=" << cfg.size << "x" << cfg.size << " threads=" << omp_get_max_threads()
            << " reps=" << cfg.reps << '\n';
  for (Method m : methods_of(cfg.method)) {
    std::vector<double> ms;
    double codes = 0.0;
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto d = descriptor(image, m, true);
      const auto t1 = std::chrono::steady_clock::now();
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      codes = static_cast<double>((cfg.size - 2) * (cfg.size - 2));
      (void)d;
    }
    std::sort(ms.begin(), ms.end());
    const double median = ms[ms.size() / 2];
    const double p95 = ms[std::min(ms.size() - 1, static_cast<std::size_t>(0.95 * static_cast<double>(ms.size())))];
    std::printf("method=%s median_ms=%.3f p95_ms=%.3f codes=%.0f\n", std::string(to_string(m)).c_str(), median, p95, codes);
  }
  return kExitOk;
}

int cmd_synth(const Config &cfg) {
  const auto kind = kind_of(cfg.kind);
  const auto ds = synthesize_dataset(cfg.seed, cfg.classes, cfg.per_class, cfg.size, kind);
  write_dataset(cfg.out, ds);
  std::cout << "wrote " << ds.items.size() << " images (" << cfg.classes << " classes, " << to_string(kind) << ") to "
            << cfg.out << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Local Radon Pattern descriptors: extraction, retrieval and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--resize", cfg.resize, "WxH | native | auto")->capture_default_str();
    sub->add_flag("--no-normalize", cfg.no_normalize, "Keep raw code counts instead of L1-normalized histograms");
    sub->add_option("--cache", cfg.cache, "Descriptor cache directory");
  };

  auto *extract = app.add_subcommand("extract", "Compute descriptors for images into a descriptor store");
  extract->add_option("inputs", cfg.inputs, "Image files or directories")->required();
  extract->add_option("-o,--out", cfg.out, "Output store directory")->required();
  extract->add_option("--label", cfg.label, "Label for all inputs (default: parent directory name)");
  extract->add_option("-d,--distance", cfg.distance, "Default distance recorded in the store");
  add_common(extract);

  auto *index = app.add_subcommand("index", "Build a search index from a dataset's reference split");
  index->add_option("--dataset", cfg.dataset, "Dataset root")->required()->check(CLI::ExistingDirectory);
  index->add_option("--kind", cfg.kind, "patch | loo")->capture_default_str();
  index->add_option("-o,--out", cfg.out, "Index directory")->required();
  index->add_option("-d,--distance", cfg.distance, "l1 | l2 | chi2 | cosine")->capture_default_str();
  add_common(index);

  auto *search = app.add_subcommand("search", "Rank indexed images by distance to a query image");
  search->add_option("--index", cfg.index, "Index directory")->required();
  search->add_option("-q,--query", cfg.query, "Query image")->required();
  search->add_option("-k", cfg.k, "Number of results")->capture_default_str();
  search->add_option("-d,--distance", cfg.distance, "l1 | l2 | chi2 | cosine | index");
  search->add_option("-m,--method", cfg.method, "median | minmax | index");
  add_common(search);

  auto *evaluate = app.add_subcommand("evaluate", "Top-1 retrieval accuracy over a dataset");
  evaluate->add_option("--dataset", cfg.dataset, "Dataset root")->required()->check(CLI::ExistingDirectory);
  evaluate->add_option("--kind", cfg.kind, "patch | loo")->capture_default_str();
  evaluate->add_option("-d,--distance", cfg.distance, "l1 | l2 | chi2 | cosine | all");
  evaluate->add_option("--report", cfg.report, "Write key=value report here");
  evaluate->add_option("--trace", cfg.trace, "Write the per-query trace (TSV) here");
  evaluate->add_flag("--strict", cfg.strict, "Treat known-dataset layout findings as errors");
  evaluate->add_option("-m,--method", cfg.method, "median | minmax | both");
  add_common(evaluate);

  auto *verify = app.add_subcommand("verify", "Check the convolution path against the brute-force oracle");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--trials", cfg.trials)->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb the fast path (negative control)");

  auto *bench = app.add_subcommand("bench", "Time descriptor extraction on a seeded random image");
  bench->add_option("--size", cfg.size, "Image side length")->capture_default_str();
  bench->add_option("--reps", cfg.reps, "Repetitions")->capture_default_str();
  bench->add_option("--seed", cfg.seed)->capture_default_str();

  auto *synth = app.add_subcommand("synth", "Write the seeded synthetic oriented-texture dataset");
  synth->add_option("-o,--out", cfg.out, "Output directory")->required();
  synth->add_option("--seed", cfg.seed)->capture_default_str();
  synth->add_option("--classes", cfg.classes)->capture_default_str();
  synth->add_option("--per-class", cfg.per_class)->capture_default_str();
  synth->add_option("--size", cfg.size, "Image side length");
  synth->add_option("--kind", cfg.kind, "patch | loo")->capture_default_str();

  extract->add_option("-m,--method", cfg.method, "median | minmax");
  index->add_option("-m,--method", cfg.method, "median | minmax");
  bench->add_option("-m,--method", cfg.method, "median | minmax | both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (*extract) return cmd_extract(cfg);
    if (*index) return cmd_index(cfg);
    if (*search) {
      if (search->count("--distance") == 0) cfg.distance = "index";
      if (search->count("--method") == 0) cfg.method = "index";
      return cmd_search(cfg);
    }
    if (*evaluate) {
      if (evaluate->count("--distance") == 0) cfg.distance = "all";
      if (evaluate->count("--method") == 0) cfg.method = "both";
      return cmd_evaluate(cfg);
    }
    if (*verify) return cmd_verify(cfg);
    if (*bench) {
      if (bench->count("--method") == 0) cfg.method = "both";
      return cmd_bench(cfg);
    }
    if (*synth) {
      if (synth->count("--size") == 0) cfg.size = 64;
      return cmd_synth(cfg);
    }
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitValidation;
}
