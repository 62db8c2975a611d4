#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lrp/gray_image.hpp"

namespace lrp {

enum class DatasetKind { PatchToScan, LeaveOneOut };
enum class Split { Train, Test, All };

std::string_view to_string(DatasetKind k);
std::string_view to_string(Split s);
DatasetKind parse_dataset_kind(std::string_view text); // "patch" / "loo"
Split parse_split(std::string_view text);

struct ManifestItem {
  std::string path; // relative to the manifest root
  std::string label;
  Split split = Split::All;
};

struct DatasetManifest {
  std::string name;
  DatasetKind kind = DatasetKind::LeaveOneOut;
  std::vector<ManifestItem> items;

  std::vector<const ManifestItem *> with_split(Split s) const;
  /// Item count per label among the given split.
  std::map<std::string, std::size_t> label_counts(Split s) const;
  /// Throws LayoutMismatch when the split structure does not match kind.
  void validate() const;
};

inline constexpr std::string_view kManifestFile = "manifest.tsv";

/// Tab-separated "path, label, split" lines. Lines starting with '#' are
/// comments; the first may carry "name=" and "kind=" fields.
void write_manifest(const std::filesystem::path &file, const DatasetManifest &m);
DatasetManifest read_manifest(const std::filesystem::path &file);

/// Loads root/manifest.tsv if present, otherwise scans the directory layout:
///   PatchToScan: root/train/<label>/<image>, root/test/<label>/<image>
///   LeaveOneOut: root/<label>/<image>
/// Items are sorted by path. Throws LayoutMismatch.
DatasetManifest load_manifest(const std::filesystem::path &root, DatasetKind kind);

/// Consistency findings for the two known datasets (KimiaPath24 scan ids and
/// split sizes, CT Emphysema class sizes). Empty when none apply.
std::vector<std::string> check_known_layout(const DatasetManifest &m);

struct SyntheticItem {
  std::string path;
  std::string label;
  Split split = Split::All;
  GrayImage image;
};

struct SyntheticDataset {
  DatasetManifest manifest;
  std::vector<SyntheticItem> items; // same order as manifest.items
};

/// Oriented stripe textures, one orientation per class, with per-sample
/// phase, period jitter and pixel noise drawn from a seeded mt19937_64.
/// For PatchToScan the first half of each class (rounded up) is train.
SyntheticDataset synthesize_dataset(std::uint64_t seed, std::size_t n_classes, std::size_t per_class,
                                    std::size_t image_size, DatasetKind kind = DatasetKind::LeaveOneOut);

/// Writes the images as PNG plus manifest.tsv under dir.
void write_dataset(const std::filesystem::path &dir, const SyntheticDataset &ds);

} // namespace lrp
