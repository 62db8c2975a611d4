#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lrp/dataset.hpp"
#include "lrp/imaging_io.hpp"
#include "lrp/pipeline.hpp"
#include "test_util.hpp"

using namespace lrp;
namespace fs = std::filesystem;

namespace {

std::uint64_t dataset_hash(const SyntheticDataset &ds) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto &it : ds.items) {
    h = fnv1a64(it.image.pixels(), h);
    h = fnv1a64(std::span(reinterpret_cast<const std::uint8_t *>(it.path.data()), it.path.size()), h);
  }
  return h;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("synthetic dataset") {
  const auto ds = synthesize_dataset(1, 3, 10, 64);
  CHECK(ds.items.size() == 30);
  CHECK(ds.manifest.items.size() == 30);
  CHECK(ds.manifest.kind == DatasetKind::LeaveOneOut);
  for (const auto &it : ds.items) CHECK(it.image.dims() == Dims{64, 64});
  const auto counts = ds.manifest.label_counts(Split::All);
  CHECK(counts.size() == 3);
  CHECK(counts.at("c0") == 10);
  CHECK_NOTHROW(ds.manifest.validate());

  CHECK(dataset_hash(ds) == dataset_hash(synthesize_dataset(1, 3, 10, 64)));
  CHECK(dataset_hash(ds) != dataset_hash(synthesize_dataset(2, 3, 10, 64)));

  const auto patch = synthesize_dataset(1, 4, 5, 32, DatasetKind::PatchToScan);
  CHECK(patch.manifest.with_split(Split::Train).size() == 12);
  CHECK(patch.manifest.with_split(Split::Test).size() == 8);
  CHECK_NOTHROW(patch.manifest.validate());

  CHECK_THROWS_AS(synthesize_dataset(1, 1, 10, 64), Error);
  CHECK_THROWS_AS(synthesize_dataset(1, 3, 1, 64), Error);
}

TEST_CASE("written datasets are byte-identical across regeneration") {
  test::TempDir a("ds-a"), b("ds-b");
  write_dataset(a.path(), synthesize_dataset(9, 2, 3, 16));
  write_dataset(b.path(), synthesize_dataset(9, 2, 3, 16));
  CHECK(slurp(a.path() / "manifest.tsv") == slurp(b.path() / "manifest.tsv"));
  CHECK(slurp(a.path() / "c1/img_002.png") == slurp(b.path() / "c1/img_002.png"));
}

TEST_CASE("manifest round trip and loading") {
  test::TempDir dir("manifest");
  const auto ds = synthesize_dataset(3, 3, 4, 20, DatasetKind::PatchToScan);
  write_dataset(dir.path(), ds);

  const auto m = load_manifest(dir.path(), DatasetKind::PatchToScan);
  CHECK(m.kind == DatasetKind::PatchToScan);
  CHECK(m.name == ds.manifest.name);
  REQUIRE(m.items.size() == ds.manifest.items.size());
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    CHECK(m.items[i].path == ds.manifest.items[i].path);
    CHECK(m.items[i].label == ds.manifest.items[i].label);
    CHECK(m.items[i].split == ds.manifest.items[i].split);
  }
  CHECK_THROWS_AS(load_manifest(dir.path(), DatasetKind::LeaveOneOut), LayoutMismatch);

  // Without the manifest file, the directory layout is scanned.
  fs::remove(dir.path() / "manifest.tsv");
  const auto scanned = load_manifest(dir.path(), DatasetKind::PatchToScan);
  CHECK(scanned.items.size() == m.items.size());
  CHECK(scanned.label_counts(Split::Test) == m.label_counts(Split::Test));
}

TEST_CASE("directory layouts") {
  test::TempDir dir("layout");
  CHECK_THROWS_AS(load_manifest(dir.path(), DatasetKind::LeaveOneOut), LayoutMismatch);
  CHECK_THROWS_AS(load_manifest(dir.path(), DatasetKind::PatchToScan), LayoutMismatch);
  CHECK_THROWS_AS(load_manifest(dir.path() / "missing", DatasetKind::LeaveOneOut), LayoutMismatch);

  for (const char *cls : {"NT", "CLE", "PSE"}) {
    fs::create_directories(dir.path() / cls);
    for (int i = 0; i < 2; ++i) save_gray(dir.path() / cls / ("p" + std::to_string(i) + ".png"), GrayImage(5, 5, 9));
  }
  std::ofstream(dir.path() / "NT" / "readme.txt") << "ignored";
  const auto m = load_manifest(dir.path(), DatasetKind::LeaveOneOut);
  CHECK(m.items.size() == 6);
  CHECK(m.items.front().path == "CLE/p0.png");
  CHECK(m.items.front().label == "CLE");

  const auto findings = check_known_layout(m);
  CHECK(findings.size() == 3); // 2 != 59, 2 != 50, 2 != 59
}

TEST_CASE("bad manifest lines") {
  test::TempDir dir("badmanifest");
  std::ofstream(dir.path() / "manifest.tsv") << "# lrp-manifest name=x kind=loo\na.png\tA\n";
  CHECK_THROWS_AS(read_manifest(dir.path() / "manifest.tsv"), FormatError);
  std::ofstream(dir.path() / "manifest.tsv") << "a.png\tA\tvalidation\n";
  CHECK_THROWS_AS(read_manifest(dir.path() / "manifest.tsv"), FormatError);
}

TEST_CASE("KimiaPath24 consistency checks") {
  DatasetManifest m;
  m.kind = DatasetKind::PatchToScan;
  for (int s = 0; s < 24; ++s) {
    m.items.push_back({"train/s" + std::to_string(s) + "/a.png", "s" + std::to_string(s), Split::Train});
    m.items.push_back({"test/s" + std::to_string(s) + "/a.png", "s" + std::to_string(s), Split::Test});
  }
  const auto findings = check_known_layout(m);
  CHECK(findings.size() == 2); // train and test totals
  m.items.pop_back();
  m.items.pop_back();
  CHECK(check_known_layout(m).size() == 3);
}
