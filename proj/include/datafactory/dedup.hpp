#pragma once

// Content deduplication in three passes: URL exact match (Bloom filter),
// content exact match (Bloom filter over a canonical 128-bit hash), and fuzzy
// match (64-bit SimHash with banded candidate lookup).

#include <bit>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "datafactory/corpus_io.hpp"
#include "datafactory/hashing.hpp"

namespace datafactory::dedup {

class BloomFilter {
 public:
  BloomFilter(std::uint64_t bit_count, std::uint32_t hash_count);

  // m = -n ln p / (ln 2)^2, k = round(m/n ln 2).
  static BloomFilter for_capacity(std::uint64_t expected_keys, double target_fpr);

  void insert(std::string_view key);
  bool contains(std::string_view key) const;
  // Inserts and reports whether the key was (probably) present before.
  bool test_and_insert(std::string_view key);

  std::uint64_t bit_count() const { return bit_count_; }
  std::uint32_t hash_count() const { return hash_count_; }
  std::uint64_t inserted_count() const { return inserted_; }
  // (1 - e^(-kn/m))^k at the current fill.
  double expected_fpr() const;

  void save(std::ostream& out) const;
  static BloomFilter load(std::istream& in);

 private:
  template <typename F>
  void for_each_bit(std::string_view key, F&& f) const;

  std::uint64_t bit_count_;
  std::uint32_t hash_count_;
  std::uint64_t inserted_ = 0;
  std::vector<std::uint64_t> words_;
};

// Hash of the canonical text (ASCII lowercased, whitespace runs collapsed).
Hash128 canonical_content_hash(std::string_view text);

struct SimHashFingerprint {
  std::uint64_t bits = 0;
  // No features could be extracted (empty canonical text).
  bool empty = false;
};

// Features are the distinct code-point 4-gram shingles of the canonical text,
// one vote each; bit i is the sign of the vote on hash bit i. Texts
// shorter than four code points contribute one whole-text shingle.
SimHashFingerprint simhash(std::string_view text);

inline int hamming(std::uint64_t a, std::uint64_t b) { return std::popcount(a ^ b); }

// Splits the 64-bit fingerprint into `bands` equal bands; any two
// fingerprints within Hamming distance `threshold` < `bands` share a band.
class BandedIndex {
 public:
  explicit BandedIndex(int bands = 4, int threshold = 3);

  int bands() const { return bands_; }
  int threshold() const { return threshold_; }
  std::size_t size() const { return fingerprints_.size(); }

  std::uint64_t band_value(std::uint64_t fp, int band) const;

  // Returns the id assigned to the fingerprint (insertion order).
  std::uint32_t insert(std::uint64_t fp);
  // Sorted, unique ids sharing at least one band with fp.
  std::vector<std::uint32_t> candidates(std::uint64_t fp) const;

  struct Match {
    std::uint32_t id;
    int distance;
  };
  // Closest confirmed match within the threshold (ties: earliest id).
  std::optional<Match> find(std::uint64_t fp) const;

  std::uint64_t fingerprint(std::uint32_t id) const { return fingerprints_.at(id); }

  void save(std::ostream& out) const;
  static BandedIndex load(std::istream& in);

 private:
  int bands_;
  int threshold_;
  int band_bits_;
  std::vector<std::uint64_t> fingerprints_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> tables_;
};

// All pairs (i < j) with Hamming distance <= threshold, found through band
// collisions and confirmed by exact distance. Sorted.
std::vector<std::pair<std::size_t, std::size_t>> near_duplicate_pairs(
    std::span<const std::uint64_t> fingerprints, int bands = 4, int threshold = 3);

struct DropLogEntry {
  std::string pass;  // "url", "exact" or "fuzzy"
  std::string kept_id;
  std::string dropped_id;
  int distance = 0;
};

struct FuzzyResult {
  std::vector<Document> kept;
  std::vector<DropLogEntry> drops;
};

// Keep-first fuzzy deduplication: a document is dropped when a previously
// kept document lies within the threshold.
FuzzyResult fuzzy_dedup(DocumentStream& docs, BandedIndex& index);

// Lowercases scheme and host, strips the fragment and common tracking query
// keys (utm_*, fbclid, gclid, mc_cid, mc_eid).
std::string canonicalize_url(std::string_view url);

struct Options {
  bool url = true;
  bool exact = true;
  bool fuzzy = true;
  double bloom_fpr = 1e-7;
  std::uint64_t expected_docs = 1'000'000;
  int bands = 4;
  int threshold = 3;
};

struct PassStats {
  std::uint64_t input = 0;
  std::uint64_t dropped = 0;
};

struct Stats {
  PassStats url;
  PassStats exact;
  PassStats fuzzy;
};

// Dedup state across a run (URL filter, content filter, banded index); can
// be snapshotted to disk and resumed.
class Deduplicator {
 public:
  explicit Deduplicator(const Options& options);

  // Runs the passes in order; returns the log entry when the document is a
  // duplicate, nullopt when it is kept (and recorded).
  std::optional<DropLogEntry> offer(const Document& doc);

  const Stats& stats() const { return stats_; }
  const Options& options() const { return options_; }

  void save(const std::filesystem::path& path) const;
  static Deduplicator load(const std::filesystem::path& path);

 private:
  Options options_;
  BloomFilter url_filter_;
  BloomFilter content_filter_;
  BandedIndex index_;
  std::vector<std::string> kept_ids_;  // by banded-index id
  Stats stats_;
};

struct PipelineResult {
  std::vector<Document> kept;
  std::vector<DropLogEntry> drops;
  Stats stats;
};

PipelineResult dedup_pipeline(DocumentStream& docs, const Options& options);

}  // namespace datafactory::dedup
