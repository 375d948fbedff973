#pragma once

// Training-sequence construction: stage 1 splices shuffled documents with
// <eos> into fixed-length chunks, stage 2 packs same-task documents into
// <pad>-tailed bins, stage 3 mixes budgeted samples of earlier stages into
// an augmentation set.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "datafactory/corpus_io.hpp"
#include "datafactory/hashing.hpp"
#include "datafactory/tokenizer.hpp"

namespace datafactory::pack {

using tok::TokenId;

class PromptTemplate {
 public:
  // `{slot}` is filled from document meta; `{{` and `}}` are literal braces.
  PromptTemplate(std::string name, std::string pattern, std::optional<std::string> language = std::nullopt,
                 std::optional<std::string> task = std::nullopt);

  const std::string& name() const { return name_; }
  const std::string& pattern() const { return pattern_; }
  const std::optional<std::string>& language() const { return language_; }
  const std::optional<std::string>& task() const { return task_; }
  const std::vector<std::string>& slots() const { return slots_; }

  // Throws Error naming the first slot missing from meta.
  std::string render(const std::map<std::string, std::string>& meta) const;

 private:
  std::string name_;
  std::string pattern_;
  std::optional<std::string> language_;
  std::optional<std::string> task_;
  std::vector<std::string> slots_;
};

// JSON: {"templates": [{"name", "pattern", "language"?, "task"?}, ...]}.
std::vector<PromptTemplate> load_prompts(const std::filesystem::path& path);

// Templates whose language and task (when set) match the document.
std::vector<const PromptTemplate*> applicable(std::span<const PromptTemplate> templates, const Document& doc);

// Replaces the text with a template chosen among the alternatives by a
// per-document seeded draw.
Document attach_prompt(const Document& doc, std::span<const PromptTemplate* const> alternatives, std::uint64_t seed);

struct TokenizedDoc {
  std::string id;
  std::optional<std::string> task;
  std::vector<TokenId> ids;
};

std::vector<TokenizedDoc> tokenize(std::span<const Document> docs, const tok::Vocab& vocab);

enum class Kind : std::uint32_t { stage1 = 1, stage2 = 2, stage3 = 3 };
const char* to_string(Kind kind);

struct Span {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive; includes the trailing <eos> when present
  bool operator==(const Span&) const = default;
};

struct PackedSequence {
  Kind kind = Kind::stage1;
  std::vector<TokenId> ids;
  std::vector<Span> spans;
  std::size_t pad_count = 0;
  std::optional<std::string> task;
  bool truncated = false;
};

struct Truncation {
  std::string doc_id;
  std::size_t original_tokens = 0;
  std::size_t dropped_tokens = 0;
};

struct PackStats {
  std::size_t input_tokens = 0;   // document content tokens
  std::size_t packed_tokens = 0;  // content tokens placed in sequences
  std::size_t truncated_tokens = 0;
  std::size_t eos_tokens = 0;
  std::size_t pad_tokens = 0;
  std::size_t sequences = 0;
};

struct SpecialIds {
  TokenId eos = 0;
  TokenId pad = 0;
};

struct PackResult {
  std::vector<PackedSequence> sequences;
  std::vector<Truncation> truncations;
  PackStats stats;
};

// Seeded shuffle, one <eos> after each document, cut into max_len chunks;
// a document crossing a boundary continues in the next chunk. Only the last
// sequence may be shorter than max_len.
PackResult pack_stage1(std::vector<TokenizedDoc> docs, SpecialIds specials, std::size_t max_len, std::uint64_t seed);

// Groups by task (sorted), shuffles within each task, places documents with
// their <eos> first-fit into open bins and pads each bin to max_len. A
// document that does not fit in an empty bin is cut to max_len ids (no <eos>)
// and logged. Throws Error on a document without a task.
PackResult pack_stage2(std::vector<TokenizedDoc> docs, SpecialIds specials, std::size_t max_len, std::uint64_t seed);

struct MixBudget {
  std::optional<std::size_t> augment;  // unset: take every augmentation doc
  std::size_t stage1 = 0;
  std::size_t stage2 = 0;
};

struct MixResult {
  std::vector<TokenizedDoc> docs;
  std::size_t augment_tokens = 0;
  std::size_t stage1_tokens = 0;
  std::size_t stage2_tokens = 0;
  std::vector<std::string> warnings;
};

// Takes shuffled documents from each pool until its token budget is reached
// (overshoot at most one document), then interleaves everything by seed.
MixResult mix_stage3(std::vector<TokenizedDoc> augment, std::vector<TokenizedDoc> stage1_pool,
                     std::vector<TokenizedDoc> stage2_pool, const MixBudget& budget, std::uint64_t seed);

// Supervised documents (with a task) follow stage-2 rules, the rest stage-1
// rules; every sequence is tagged stage3.
PackResult pack_stage3(std::vector<TokenizedDoc> mixed, SpecialIds specials, std::size_t max_len, std::uint64_t seed);

// Shard: magic "DFPACK01", u32 version, u32 max_len, u64 vocab hash, u32 kind,
// u64 sequence count, then per sequence u32 length and that many LE u32 ids.
// Spans go to `<shard>.spans.jsonl`, one line per sequence.
void write_shard(const std::filesystem::path& path, const PackResult& result, Kind kind, std::size_t max_len,
                 std::uint64_t vocab_hash);

struct Shard {
  Kind kind = Kind::stage1;
  std::size_t max_len = 0;
  std::uint64_t vocab_hash = 0;
  std::vector<std::vector<TokenId>> sequences;
};
Shard read_shard(const std::filesystem::path& path);

std::filesystem::path spans_path(const std::filesystem::path& shard);

}  // namespace datafactory::pack
