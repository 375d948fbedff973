#pragma once

// Data preprocessing: language detection, encoding normalization,
// Traditional to Simplified Chinese conversion and removal of meaningless
// code points.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "datafactory/config.hpp"
#include "datafactory/corpus_io.hpp"

namespace datafactory::preprocess {

struct CharClassRatios {
  double latin = 0.0;
  double cjk = 0.0;
  double other = 1.0;
};

struct LanguageVerdict {
  Language tag = Language::other;
  double confidence = 0.0;
  CharClassRatios ratios;
};

// Character-class vote over letters: zh when CJK >= 0.5, en when Latin >= 0.5
// and CJK < 0.05, otherwise other. Confidence is the dominant fraction.
LanguageVerdict detect_language(std::string_view text);

struct NormalizedText {
  std::string text;
  std::size_t replacement_count = 0;
};

// Decodes arbitrary bytes as UTF-8 (each maximal invalid subpart becomes one
// U+FFFD) and applies NFKC.
NormalizedText normalize_encoding(std::string_view raw_bytes);

class SimplifiedConverter {
 public:
  SimplifiedConverter() = default;
  // Pairs are resolved to their fixpoint so conversion is idempotent.
  explicit SimplifiedConverter(std::unordered_map<char32_t, char32_t> table);
  // `traditional<TAB>simplified` per line, `#` comments.
  static SimplifiedConverter load(const std::filesystem::path& path);

  std::string convert(std::string_view text) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<char32_t, char32_t> table_;
};

struct StripPolicy {
  bool control = true;
  bool zero_width = true;
  bool emoji = true;
  std::set<char32_t> extra_symbols;

  static StripPolicy defaults();
  // Keys strip.control, strip.zero_width, strip.emoji, strip.extra_symbols
  // (comma separated code points such as U+2605 or 0x2605).
  static StripPolicy from_config(const Config& cfg);

  bool removes(char32_t cp) const;
};

std::string strip_meaningless(std::string_view text, const StripPolicy& policy);

struct Options {
  StripPolicy strip = StripPolicy::defaults();
  const SimplifiedConverter* t2s = nullptr;
  std::set<Language> keep_languages{Language::en, Language::zh};
};

struct Outcome {
  std::optional<Document> doc;
  LanguageVerdict verdict;
  std::size_t replacement_count = 0;
  // Empty when kept; otherwise "language" or "empty".
  std::string drop_reason;
};

// Full preprocessing of one document in pipeline order: detect language,
// normalize, convert to Simplified, strip.
Outcome preprocess_document(Document doc, const Options& options);

}  // namespace datafactory::preprocess
