#pragma once

// Corpus quality evaluation: automatic metrics on a sample, human label
// ingestion, and the accept/reject gate.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "datafactory/config.hpp"
#include "datafactory/corpus_io.hpp"
#include "datafactory/lm_scoring.hpp"
#include "datafactory/rule_filter.hpp"

namespace datafactory::quality {

// Ordered (label, fraction) bins.
using Histogram = std::vector<std::pair<std::string, double>>;

struct QualityMetrics {
  std::size_t sample_size = 0;
  // Level 1: fraction of sampled documents with at least one lexicon hit,
  // indexed by filter::RateKind.
  std::array<double, 4> level1_rates{};
  // Mean per-document token rate for the same lexicons (report only).
  std::array<double, 4> mean_word_rates{};
  // Level 2. Perplexity is token-weighted over documents with a model for
  // their language; absent when none could be scored.
  std::optional<double> perplexity;
  double informativeness = 0.0;  // mean unique-token ratio (proxy)
  double readability = 0.0;      // fraction of well-formed sentences (proxy)
  // Level 3, report only.
  Histogram language;
  Histogram doc_length;
  Histogram topic;
};

struct ReadabilityBounds {
  std::size_t min_tokens = 3;
  std::size_t max_tokens = 100;
};

using LexiconSet = std::array<const filter::Lexicon*, 4>;
LexiconSet rate_lexicons(const filter::RuleEngine& engine);

// Mergeable per-document accumulator so metric computation can be split
// across workers; merge is commutative.
class MetricsAccumulator {
 public:
  MetricsAccumulator(const LexiconSet& lexicons, const std::map<Language, const lm::NGramLM*>& models,
                     ReadabilityBounds bounds = {});
  void add(const Document& doc);
  void merge(const MetricsAccumulator& other);
  QualityMetrics finish() const;

 private:
  LexiconSet lexicons_;
  std::map<Language, const lm::NGramLM*> models_;
  ReadabilityBounds bounds_;
  std::size_t docs_ = 0;
  std::array<std::size_t, 4> violating_{};
  std::array<double, 4> rate_sum_{};
  double lm_log_prob_ = 0.0;
  std::size_t lm_tokens_ = 0;
  double informativeness_sum_ = 0.0;
  std::size_t sentences_ = 0;
  std::size_t good_sentences_ = 0;
  std::map<std::string, std::size_t> language_;
  std::map<std::string, std::size_t> length_;
  std::map<std::string, std::size_t> topic_;
};

// Throws Error on an empty sample.
QualityMetrics auto_metrics(std::span<const Document> sample, const LexiconSet& lexicons,
                            const std::map<Language, const lm::NGramLM*>& models,
                            ReadabilityBounds bounds = {});

// Keyword bucket for a document ("other" when nothing matches).
std::string topic_of(std::string_view text);
// Length bucket by code points: <256, <1k, <4k, <16k, >=16k.
std::string length_bucket(std::size_t codepoints);

struct HumanEvalReport {
  std::size_t sample_size = 0;
  double coherence = 0.0;
  double readability = 0.0;
  double toxic = 0.0;  // fraction judged non-toxic (compliant)
};

struct HumanLabel {
  std::string doc_id;
  bool coherence = false;
  bool readability = false;
  bool toxic = false;  // true = compliant
};

// CSV with header `doc_id,coherence,readability,toxic` and 0/1 cells.
// Throws ParseError on an empty file, unknown label or missing doc_id.
HumanEvalReport ingest_human_labels(const std::filesystem::path& path);
HumanEvalReport summarize_labels(std::span<const HumanLabel> labels);
void write_human_labels(const std::filesystem::path& path, std::span<const HumanLabel> labels);

struct Thresholds {
  double level1_rate = 0.001;
  std::optional<double> perplexity_max;
  std::optional<double> informativeness_floor;
  std::optional<double> auto_readability_floor;
  std::optional<double> coherence_floor;
  std::optional<double> readability_floor;
  std::optional<double> toxic_floor;

  // Reads the gate.* keys.
  static Thresholds from_config(const Config& config);
  bool needs_human() const { return coherence_floor || readability_floor || toxic_floor; }
};

struct Failure {
  std::string metric;
  double observed = 0.0;
  double threshold = 0.0;
  int level = 1;
};

struct GateVerdict {
  bool accept = true;
  std::vector<Failure> failing;
};

// Level-1 rates fail when they exceed the threshold; floors fail when the
// observed value is below them. Throws Error when a human floor is set but
// no human report is given.
GateVerdict gate(const QualityMetrics& metrics, const HumanEvalReport* human, const Thresholds& thresholds);

nlohmann::json to_json(const QualityMetrics& metrics);
nlohmann::json to_json(const HumanEvalReport& human);
nlohmann::json to_json(const GateVerdict& verdict);

}  // namespace datafactory::quality
