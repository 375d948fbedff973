#pragma once

// Rule-based filtering at document, paragraph and sentence level, plus the
// regex word rates used by the quality report.

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "datafactory/config.hpp"
#include "datafactory/corpus_io.hpp"
#include "datafactory/text.hpp"

namespace datafactory::filter {

// A named set of regular expressions (one per line in its file), matched
// case-insensitively against UTF-8 bytes.
class Lexicon {
 public:
  Lexicon(std::string name, std::vector<std::string> patterns);
  static Lexicon load(std::string name, const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }

  std::vector<text::Span> matches(std::string_view s) const;
  bool matches_any(std::string_view s) const;

 private:
  struct Impl;
  std::string name_;
  std::vector<std::string> patterns_;
  std::shared_ptr<const Impl> impl_;
};

// Fraction of whitespace/CJK tokens that overlap a lexicon match; 0 for an
// empty text.
double word_rate(std::string_view s, const Lexicon& lexicon);

enum class Level { document = 0, paragraph = 1, sentence = 2 };
enum class RuleKind { regex_match, length_bound, ratio_bound };
enum class Action { drop_unit, drop_document, count_only };

// What a ratio-bound rule measures, as a fraction of non-space code points
// (or of lines for the line-based classes).
enum class RatioClass { digit, symbol, upper, whitespace, letter, cjk, pattern_chars, pattern_lines, duplicate_lines };

enum class RateKind { privacy = 0, toxic = 1, adv = 2, webpage = 3 };
inline constexpr std::array<const char*, 4> kRateNames = {
    "privacy_word_rate", "toxic_word_rate", "adv_word_rate", "webpage_funcword_rate"};

const char* to_string(Level level);
const char* to_string(Action action);

struct Rule {
  std::string id;
  Level level = Level::document;
  RuleKind kind = RuleKind::regex_match;
  Action action = Action::drop_document;
  std::string pattern;  // literal regex or @lexicon
  std::optional<double> min;
  std::optional<double> max;
  bool measure_tokens = false;  // length-bound: tokens instead of code points
  RatioClass ratio_class = RatioClass::digit;
  std::size_t min_hits = 1;
  std::optional<RateKind> rate;
};

struct FilterOutcome {
  bool keep = true;
  std::array<std::size_t, 3> dropped_units{};  // by Level
  std::map<std::string, std::size_t> rule_hits;
  std::array<double, 4> rates{};              // by RateKind
  // (rule id, excerpt of the unit that fired) for operator review.
  std::vector<std::pair<std::string, std::string>> hit_samples;
};

struct FilterResult {
  std::optional<Document> doc;
  FilterOutcome outcome;
};

class RuleEngine {
 public:
  // Empty engine: keeps everything verbatim.
  RuleEngine() = default;

  // Ruleset config: `[lexicons]` name = path, then one `[rule.<id>]` section
  // per rule with level, kind, action and kind-specific keys.
  static RuleEngine compile(const Config& config);
  static RuleEngine load(const std::filesystem::path& path);
  static RuleEngine compile(std::vector<Rule> rules, std::map<std::string, Lexicon> lexicons);

  FilterResult apply(const Document& doc) const;

  std::size_t rule_count() const { return rules_.size(); }
  const std::vector<Rule>& rules() const { return rules_; }
  const Lexicon* lexicon(std::string_view name) const;
  const Lexicon* rate_lexicon(RateKind kind) const;

 private:
  bool fires(std::size_t rule_index, std::string_view unit) const;

  std::vector<Rule> rules_;
  // Pattern matcher per rule (null for rules without a pattern).
  std::vector<std::shared_ptr<const Lexicon>> matchers_;
  std::map<std::string, Lexicon> lexicons_;
  std::array<std::shared_ptr<const Lexicon>, 4> rate_lexicons_;
};

}  // namespace datafactory::filter
