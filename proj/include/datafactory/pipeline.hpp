#pragma once

// The whole data factory: preprocess -> score -> filter -> dedup -> evaluate,
// then packing when the gate accepts. Every stage writes to a temporary path
// and renames on success; a stamp file records the chained config hash so a
// rerun resumes after the last completed stage.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "datafactory/config.hpp"
#include "datafactory/dedup.hpp"
#include "datafactory/lm_scoring.hpp"
#include "datafactory/preprocess.hpp"
#include "datafactory/quality_eval.hpp"
#include "datafactory/rule_filter.hpp"

namespace datafactory::pipeline {

enum class Stage { preprocess, score, filter, dedup, evaluate };
inline constexpr std::array<Stage, 5> kStageOrder = {Stage::preprocess, Stage::score, Stage::filter, Stage::dedup,
                                                     Stage::evaluate};
const char* to_string(Stage stage);
const char* short_name(Stage stage);  // DP, AS, RF, CD, DE
std::optional<Stage> parse_stage(std::string_view name);

struct Issue {
  std::string field;
  std::string reason;
};
std::string format(const Issue& issue);

// Empty iff the config is runnable. Paths resolve against the config file.
std::vector<Issue> validate(const Config& config);

// Counts for one stage.
struct Counts {
  std::uint64_t docs = 0;
  std::uint64_t tokens = 0;
};
Counts count_manifest(const std::filesystem::path& path);

// Stage building blocks, shared with the single-stage subcommands. Each
// streams `input` to `output` and returns stage details as JSON.
preprocess::Options preprocess_options(const Config& config, const preprocess::SimplifiedConverter* t2s);
nlohmann::json run_preprocess(const std::filesystem::path& input, const std::filesystem::path& output,
                              const preprocess::Options& options, unsigned jobs);

lm::TrainOptions train_options(const Config& config, Language lang);
lm::BandThresholds parse_bands(std::string_view text);

nlohmann::json run_filter(const std::filesystem::path& input, const std::filesystem::path& output,
                          const filter::RuleEngine& engine, unsigned jobs, std::size_t hit_samples,
                          const std::filesystem::path& hits_path);

dedup::Options dedup_options(const Config& config);
nlohmann::json run_dedup(const std::filesystem::path& input, const std::filesystem::path& output,
                         dedup::Deduplicator& dedup, const std::filesystem::path& drop_log);

// Sampled metrics accumulated in fixed chunks merged in order.
quality::QualityMetrics evaluate_sample(const std::vector<Document>& sample, const quality::LexiconSet& lexicons,
                                        const std::map<Language, const lm::NGramLM*>& models, unsigned jobs);

struct Suggestion {
  std::string metric;
  std::string setting;
  std::string current;
  std::string suggested;
};
// Stricter settings an operator may apply after a reject; never applied
// automatically.
std::vector<Suggestion> suggest(const quality::GateVerdict& verdict, const Config& config);

struct StageReport {
  Stage stage = Stage::preprocess;
  bool enabled = true;
  Counts input;
  Counts retained;
  nlohmann::json details = nlohmann::json::object();
  bool resumed = false;
  double seconds = 0.0;
};

struct RunReport {
  std::vector<StageReport> stages;
  std::optional<quality::GateVerdict> verdict;
  nlohmann::json evaluation = nlohmann::json::object();
  std::vector<Suggestion> suggestions;
  nlohmann::json packing;  // null when not packed
  double pack_seconds = 0.0;

  bool accepted() const { return !verdict || verdict->accept; }
};

struct RunOptions {
  unsigned jobs = 0;  // 0: available parallelism
  bool force = false; // ignore completed-stage stamps
  std::ostream* log = nullptr;
};

// Throws Error naming the stage (and document context where there is one)
// when a stage fails; report.json and timings.json are written in either
// case of the gate.
RunReport run(const Config& config, const RunOptions& options = {});

// 0 accept, 2 reject.
int exit_code(const RunReport& report);

// Deterministic document (no wall-clock values, paths relative to the output
// directory).
nlohmann::json to_json(const RunReport& report);
nlohmann::json timings_json(const RunReport& report);

// Renders a report.json file.
nlohmann::json load_report(const std::filesystem::path& path);
std::string render_table(const nlohmann::json& report);
std::string render_csv(const nlohmann::json& report);

}  // namespace datafactory::pipeline
