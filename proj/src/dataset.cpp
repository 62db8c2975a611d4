#include "lrp/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "lrp/errors.hpp"
#include "lrp/imaging_io.hpp"

namespace lrp {

namespace fs = std::filesystem;

std::string_view to_string(DatasetKind k) { return k == DatasetKind::PatchToScan ? "patch" : "loo"; }

std::string_view to_string(Split s) {
  switch (s) {
  case Split::Train: return "train";
  case Split::Test: return "test";
  case Split::All: return "all";
  }
  return "?";
}

DatasetKind parse_dataset_kind(std::string_view text) {
  if (text == "patch" || text == "patch-to-scan") return DatasetKind::PatchToScan;
  if (text == "loo" || text == "leave-one-out") return DatasetKind::LeaveOneOut;
  throw Error("unknown dataset kind '" + std::string(text) + "' (expected patch or loo)");
}

Split parse_split(std::string_view text) {
  if (text == "train") return Split::Train;
  if (text == "test") return Split::Test;
  if (text == "all") return Split::All;
  throw FormatError("unknown split '" + std::string(text) + "'");
}

std::vector<const ManifestItem *> DatasetManifest::with_split(Split s) const {
  std::vector<const ManifestItem *> out;
  for (const auto &it : items)
    if (it.split == s) out.push_back(&it);
  return out;
}

std::map<std::string, std::size_t> DatasetManifest::label_counts(Split s) const {
  std::map<std::string, std::size_t> out;
  for (const auto &it : items)
    if (it.split == s) ++out[it.label];
  return out;
}

void DatasetManifest::validate() const {
  if (items.empty()) throw LayoutMismatch("dataset '" + name + "' has no items");
  std::size_t train = 0, test = 0, all = 0;
  for (const auto &it : items) {
    train += it.split == Split::Train;
    test += it.split == Split::Test;
    all += it.split == Split::All;
  }
  if (kind == DatasetKind::PatchToScan && (train == 0 || test == 0 || all != 0))
    throw LayoutMismatch("patch-to-scan dataset needs non-empty train and test splits only");
  if (kind == DatasetKind::LeaveOneOut && (all < 2 || train != 0 || test != 0))
    throw LayoutMismatch("leave-one-out dataset needs at least two items with split 'all'");
}

void write_manifest(const fs::path &file, const DatasetManifest &m) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw Error("cannot write manifest " + file.string());
  out << "# lrp-manifest name=" << m.name << " kind=" << to_string(m.kind) << '\n';
  for (const auto &it : m.items) out << it.path << '\t' << it.label << '\t' << to_string(it.split) << '\n';
}

DatasetManifest read_manifest(const fs::path &file) {
  std::ifstream in(file);
  if (!in) throw FileNotFound("cannot open manifest " + file.string());
  DatasetManifest m;
  m.name = file.parent_path().filename().string();
  bool kind_seen = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream fields(line.substr(1));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const auto key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "name") m.name = value;
        if (key == "kind") {
          m.kind = parse_dataset_kind(value);
          kind_seen = true;
        }
      }
      continue;
    }
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3)
      throw FormatError(file.string() + ":" + std::to_string(lineno) + ": expected path<TAB>label<TAB>split");
    m.items.push_back({cols[0], cols[1], parse_split(cols[2])});
  }
  if (!kind_seen) {
    const bool any_all = std::any_of(m.items.begin(), m.items.end(), [](const auto &it) { return it.split == Split::All; });
    m.kind = any_all ? DatasetKind::LeaveOneOut : DatasetKind::PatchToScan;
  }
  return m;
}

namespace {

void collect_class_dirs(const fs::path &root, const fs::path &base, Split split, std::vector<ManifestItem> &out) {
  for (const auto &cls : fs::directory_iterator(base)) {
    if (!cls.is_directory()) continue;
    const std::string label = cls.path().filename().string();
    for (const auto &f : fs::recursive_directory_iterator(cls.path())) {
      if (!f.is_regular_file() || !is_image_file(f.path())) continue;
      out.push_back({fs::relative(f.path(), root).generic_string(), label, split});
    }
  }
}

} // namespace

DatasetManifest load_manifest(const fs::path &root, DatasetKind kind) {
  if (!fs::is_directory(root)) throw LayoutMismatch("dataset root is not a directory: " + root.string());

  DatasetManifest m;
  if (fs::is_regular_file(root / kManifestFile)) {
    m = read_manifest(root / kManifestFile);
    if (m.kind != kind)
      throw LayoutMismatch("manifest declares kind '" + std::string(to_string(m.kind)) + "', requested '" +
                           std::string(to_string(kind)) + "'");
  } else {
    m.name = root.filename().string();
    if (m.name.empty()) m.name = root.parent_path().filename().string();
    m.kind = kind;
    if (kind == DatasetKind::PatchToScan) {
      if (!fs::is_directory(root / "train") || !fs::is_directory(root / "test"))
        throw LayoutMismatch("patch-to-scan layout needs train/ and test/ under " + root.string());
      collect_class_dirs(root, root / "train", Split::Train, m.items);
      collect_class_dirs(root, root / "test", Split::Test, m.items);
    } else {
      collect_class_dirs(root, root, Split::All, m.items);
    }
    std::sort(m.items.begin(), m.items.end(), [](const auto &a, const auto &b) { return a.path < b.path; });
  }
  m.validate();
  return m;
}

std::vector<std::string> check_known_layout(const DatasetManifest &m) {
  std::vector<std::string> findings;
  std::set<std::string> labels;
  for (const auto &it : m.items) labels.insert(it.label);

  const bool scan_ids = std::all_of(labels.begin(), labels.end(), [](const std::string &l) {
    return l.size() >= 2 && l[0] == 's' && std::all_of(l.begin() + 1, l.end(), [](char c) { return c >= '0' && c <= '9'; });
  });
  if (m.kind == DatasetKind::PatchToScan && scan_ids) {
    std::set<std::string> expected;
    for (int s = 0; s < 24; ++s) expected.insert("s" + std::to_string(s));
    if (labels != expected) findings.push_back("KimiaPath24 layout expects the 24 scans s0..s23");
    const auto train = m.with_split(Split::Train).size(), test = m.with_split(Split::Test).size();
    if (train != 27055) findings.push_back("KimiaPath24 expects 27055 train patches, found " + std::to_string(train));
    if (test != 1325) findings.push_back("KimiaPath24 expects 1325 test patches, found " + std::to_string(test));
  }

  const std::set<std::string> ct_classes = {"NT", "CLE", "PSE"};
  if (m.kind == DatasetKind::LeaveOneOut && labels == ct_classes) {
    const auto counts = m.label_counts(Split::All);
    const std::map<std::string, std::size_t> expected = {{"NT", 59}, {"CLE", 50}, {"PSE", 59}};
    for (const auto &[cls, n] : expected)
      if (counts.at(cls) != n)
        findings.push_back("CT Emphysema expects " + std::to_string(n) + " " + cls + " patches, found " +
                           std::to_string(counts.at(cls)));
  }
  return findings;
}

namespace {

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

GrayImage stripe_image(std::mt19937_64 &rng, double angle, std::size_t size) {
  const double phase = 2.0 * std::numbers::pi * uniform01(rng);
  const double period = 6.0 + 2.0 * uniform01(rng);
  const double amplitude = 70.0 + 20.0 * uniform01(rng);
  const double cx = std::cos(angle), sy = std::sin(angle);
  GrayImage img(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      const double t = (static_cast<double>(c) * cx + static_cast<double>(r) * sy) / period;
      const double noise = static_cast<double>(static_cast<int>(rng() % 17) - 8);
      const double v = 128.0 + amplitude * std::sin(2.0 * std::numbers::pi * t + phase) + noise;
      img(r, c) = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
    }
  return img;
}

} // namespace

SyntheticDataset synthesize_dataset(std::uint64_t seed, std::size_t n_classes, std::size_t per_class,
                                    std::size_t image_size, DatasetKind kind) {
  if (n_classes < 2 || per_class < 2) throw Error("synthetic dataset needs >= 2 classes and >= 2 samples per class");
  if (image_size < 3) throw ImageTooSmall("synthetic images must be at least 3x3");

  SyntheticDataset ds;
  ds.manifest.name = "synthetic-" + std::to_string(seed);
  ds.manifest.kind = kind;
  std::mt19937_64 rng(seed);
  const std::size_t n_train = (per_class + 1) / 2;
  for (std::size_t k = 0; k < n_classes; ++k) {
    const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_classes);
    const std::string label = "c" + std::to_string(k);
    for (std::size_t i = 0; i < per_class; ++i) {
      SyntheticItem item;
      item.label = label;
      item.split = kind == DatasetKind::LeaveOneOut ? Split::All : (i < n_train ? Split::Train : Split::Test);
      char name[32];
      std::snprintf(name, sizeof name, "img_%03zu.png", i);
      item.path = (kind == DatasetKind::LeaveOneOut ? "" : std::string(to_string(item.split)) + "/") + label + "/" + name;
      item.image = stripe_image(rng, angle, image_size);
      ds.manifest.items.push_back({item.path, item.label, item.split});
      ds.items.push_back(std::move(item));
    }
  }
  return ds;
}

void write_dataset(const fs::path &dir, const SyntheticDataset &ds) {
  for (const auto &it : ds.items) {
    const fs::path p = dir / it.path;
    fs::create_directories(p.parent_path());
    save_gray(p, it.image);
  }
  write_manifest(dir / kManifestFile, ds.manifest);
}

} // namespace lrp
