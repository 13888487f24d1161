#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knotdom/diagram.hpp"
#include "knotdom/laurent.hpp"

namespace knotdom {

/// Corpus file or record is malformed, inconsistent, or contradicts itself.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tri { Unknown, False, True };

inline bool is_true(Tri t) noexcept { return t == Tri::True; }
inline bool is_false(Tri t) noexcept { return t == Tri::False; }

enum class Flag {
  alternating,
  toroidally_alternating,
  fibred,
  two_bridge,
  montesinos,
  small,
  free,
  simple,
  unknot,
  no_winding_zero_companion,
  hyperbolic,
  lo_double_cover,
  lspace_double_cover,
};

inline constexpr std::size_t kFlagCount = 13;
std::string_view flag_name(Flag f);
std::optional<Flag> flag_from_name(std::string_view name);

class Flags {
 public:
  Tri get(Flag f) const { return values_[static_cast<std::size_t>(f)]; }
  void set(Flag f, Tri v) { values_[static_cast<std::size_t>(f)] = v; }
  bool operator[](Flag f) const { return is_true(get(f)); }
  friend bool operator==(const Flags&, const Flags&) = default;

 private:
  std::array<Tri, kFlagCount> values_{};
};

/// Gromov volume metadata, rounded half-up to 1e-8.
class Volume {
 public:
  static constexpr int kDecimals = 8;
  static Volume parse(std::string_view text);

  /// Fixed-point form with exactly kDecimals digits after the point.
  std::string str() const;
  /// Value times 10^kDecimals.
  const Integer& scaled() const noexcept { return scaled_; }
  friend bool operator==(const Volume& a, const Volume& b) { return a.scaled_ == b.scaled_; }

 private:
  Integer scaled_;
};

struct SatelliteOf {
  std::string pattern;
  std::string companion;
  int winding = 0;
};

struct KnotRecord {
  std::string name;
  std::optional<PDCode> diagram;
  std::optional<BraidWord> braid;

  std::optional<LaurentPoly> delta;
  std::optional<Integer> determinant;
  std::optional<LaurentPoly> jones;

  std::optional<int> genus_lower;
  std::optional<int> genus_upper;
  std::optional<int> genus_exact;
  std::optional<int> ghat;
  std::optional<Volume> volume;

  Flags flags;
  std::optional<std::string> mutant_class;
  std::optional<std::vector<std::string>> connected_sum_of;
  std::optional<SatelliteOf> satellite_of;
  Tri sum_of_simple = Tri::Unknown;
  /// Another record describing the same knot (e.g. a different diagram).
  std::optional<std::string> same_knot_as;

  bool enriched = false;

  bool metadata_only() const noexcept { return !diagram && !braid; }
  /// Name of the knot this record stands for.
  const std::string& canonical_name() const noexcept { return same_knot_as ? *same_knot_as : name; }
  Tri flag(Flag f) const { return flags.get(f); }
  /// Diagram, or the closure of the braid, if either is present.
  std::optional<PDCode> planar_diagram() const;
};

class Corpus {
 public:
  /// Throws CorpusError on a duplicate name.
  void add(KnotRecord record);

  const KnotRecord& at(std::string_view name) const;
  const KnotRecord* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const noexcept { return records_.size(); }
  /// Sorted by name.
  std::vector<std::string> names() const;
  const std::map<std::string, KnotRecord, std::less<>>& records() const noexcept { return records_; }
  std::map<std::string, KnotRecord, std::less<>>& records() noexcept { return records_; }

 private:
  std::map<std::string, KnotRecord, std::less<>> records_;
};

KnotRecord record_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const KnotRecord& r);

/// Parse, validate, enrich and cross-check a corpus document.
Corpus parse_corpus(const nlohmann::json& document, unsigned threads = 1);
Corpus load_corpus(const std::filesystem::path& path, unsigned threads = 1);

/// Apply the flag implications to a fixed point. Returns the number of passes
/// (the last pass changes nothing). Throws CorpusError on a contradiction.
int apply_flag_closure(KnotRecord& r);

/// Fill computed invariants and check them against declared values.
KnotRecord enrich_record(KnotRecord r);

struct GenusInterval {
  int lower = 0;
  std::optional<int> upper;  // nullopt = unbounded
};

GenusInterval genus_interval(const KnotRecord& r);

}  // namespace knotdom
