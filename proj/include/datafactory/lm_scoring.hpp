#pragma once

// Automatic scoring: n-gram reference language models, document perplexity
// and percentile banding into high / medium / discard.

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "datafactory/corpus_io.hpp"

namespace datafactory::lm {

enum class Smoothing : std::uint32_t { kneser_ney = 0, add_k = 1 };

// Whitespace split for English references, one token per character for
// Chinese (no segmenter required).
enum class TokenScheme : std::uint32_t { whitespace = 0, character = 1 };

TokenScheme scheme_for(Language lang);
std::vector<std::string> tokenize(std::string_view sentence, TokenScheme scheme);

// Splits a document into sentences (paragraph then sentence boundaries),
// returning only those with at least one token.
std::vector<std::vector<std::string>> sentences(std::string_view doc_text, TokenScheme scheme);

struct TrainOptions {
  int order = 5;
  Smoothing smoothing = Smoothing::kneser_ney;
  double add_k = 1.0;
  // Tokens seen fewer times map to <unk>.
  std::size_t min_count = 1;
  TokenScheme scheme = TokenScheme::whitespace;
};

using WordId = std::uint32_t;

class NGramLM {
 public:
  static constexpr WordId kUnk = 0;
  static constexpr WordId kBos = 1;
  static constexpr WordId kEos = 2;

  static NGramLM train(DocumentStream& reference, const TrainOptions& options);
  static NGramLM train(const std::vector<std::string>& reference_texts, const TrainOptions& options);

  int order() const { return order_; }
  Smoothing smoothing() const { return smoothing_; }
  TokenScheme scheme() const { return scheme_; }

  // Predictable vocabulary: every word plus <unk> and </s>; <s> excluded.
  std::size_t vocab_size() const { return words_.size() - 1; }
  WordId id(std::string_view word) const;
  const std::string& word(WordId id) const { return words_.at(id); }
  // Ids that can be predicted (everything except <s>).
  std::vector<WordId> predictable_ids() const;

  // P(w | context); only the last order-1 ids of the context are used.
  double prob(std::span<const WordId> context, WordId w) const;

  struct Score {
    double log_prob = 0.0;  // natural log
    std::size_t tokens = 0; // including one </s> per sentence
  };
  Score score_sentence(std::span<const std::string> tokens) const;
  Score score_text(std::string_view doc_text) const;

  // exp(-log_prob / tokens); throws if the text has no tokens.
  double perplexity(std::string_view doc_text) const;

  void save(const std::filesystem::path& path) const;
  static NGramLM load(const std::filesystem::path& path);

  double discount(int level) const { return discounts_.at(static_cast<std::size_t>(level - 1)); }

 private:
  struct ContextStats {
    double total = 0.0;
    std::uint32_t types = 0;
  };
  struct Level {
    std::unordered_map<std::string, double> grams;
    std::unordered_map<std::string, ContextStats> contexts;
  };

  static NGramLM build(std::vector<std::vector<std::string>> sentences, const TrainOptions& options);
  void rebuild_contexts();
  double prob_kn(std::span<const WordId> ctx, WordId w) const;
  double prob_add_k(std::span<const WordId> ctx, WordId w) const;

  int order_ = 0;
  Smoothing smoothing_ = Smoothing::kneser_ney;
  TokenScheme scheme_ = TokenScheme::whitespace;
  double add_k_ = 1.0;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> index_;
  std::vector<Level> levels_;
  std::vector<double> discounts_;
};

enum class Band { high, medium, discard };
const char* to_string(Band band);

struct BandThresholds {
  double high = 0.30;
  double medium = 0.60;
};

struct BandedDoc {
  std::string doc_id;
  double ppl = 0.0;
  double percentile = 0.0;
  Band band = Band::discard;
};

// Ranks by ascending perplexity (ties by doc id), rank r of N gets
// percentile r/N; the first ceil(high*N) ranks are high, up to
// ceil(medium*N) medium, the rest discard. A single document is high.
// Output is in rank order.
std::vector<BandedDoc> band_by_ppl(std::vector<std::pair<std::string, double>> scores,
                                   const BandThresholds& thresholds = {});

struct ScoringStats {
  std::uint64_t input = 0;
  std::uint64_t high = 0;
  std::uint64_t medium = 0;
  std::uint64_t discarded = 0;
  std::uint64_t unscorable = 0;
};

// Two-pass streaming scoring of a manifest: pass one writes perplexities to a
// side file, pass two re-reads the input and keeps high and medium documents.
// Documents are ranked within their language pool; a pool with no model is
// passed through unscored. Scoring runs on `jobs` threads; the result does
// not depend on it.
ScoringStats score_and_filter(const std::filesystem::path& input, const std::filesystem::path& output,
                              const std::map<Language, const NGramLM*>& models,
                              const BandThresholds& thresholds,
                              const std::filesystem::path& scores_path, unsigned jobs = 1);

}  // namespace datafactory::lm
