#pragma once

// JSON-Lines corpus records: one Document per line. Reading is streaming and
// transparently handles gzip input; malformed lines are reported with their
// line number rather than skipped silently.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace datafactory {

enum class Language { en, zh, other };

const char* to_string(Language lang);
Language parse_language(std::string_view tag);

struct Document {
  std::string id;
  std::optional<std::string> url;
  std::optional<Language> language;
  std::string text;
  std::string source;
  // Stage-2 task type; present iff the record is supervised.
  std::optional<std::string> task;
  std::map<std::string, std::string> meta;

  bool supervised() const { return task.has_value(); }
  bool operator==(const Document&) const = default;
};

struct Manifest {
  std::filesystem::path path;
  std::uint64_t record_count = 0;
  std::uint64_t byte_count = 0;
};

struct RecordError {
  std::size_t line = 0;
  std::string reason;
};

// Serializes one record (no trailing newline). Newlines inside text are
// escaped by JSON, so every record occupies exactly one line.
std::string to_json_line(const Document& doc);
// Parses one record; `fallback_id` is used when the record carries no id.
// Throws std::invalid_argument carrying the reason on bad input.
Document from_json_line(std::string_view line, const std::string& fallback_id);

class DocumentStream {
 public:
  virtual ~DocumentStream() = default;
  virtual std::optional<Document> next() = 0;
};

class VectorStream final : public DocumentStream {
 public:
  explicit VectorStream(std::vector<Document> docs) : docs_(std::move(docs)) {}
  std::optional<Document> next() override;

 private:
  std::vector<Document> docs_;
  std::size_t pos_ = 0;
};

class DocumentReader final : public DocumentStream {
 public:
  explicit DocumentReader(const std::filesystem::path& path);
  ~DocumentReader() override;
  DocumentReader(const DocumentReader&) = delete;
  DocumentReader& operator=(const DocumentReader&) = delete;

  std::optional<Document> next() override;

  const std::vector<RecordError>& errors() const { return errors_; }
  std::size_t line() const { return line_; }

 private:
  bool read_line(std::string& out);

  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string file_label_;
  std::size_t line_ = 0;
  std::vector<RecordError> errors_;
};

// Reads a whole file; malformed lines end up in `errors` when given, else
// the first one is thrown as ParseError.
std::vector<Document> read_all(const std::filesystem::path& path,
                               std::vector<RecordError>* errors = nullptr);

class DocumentWriter {
 public:
  explicit DocumentWriter(const std::filesystem::path& path);
  void write(const Document& doc);
  Manifest finish();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::uint64_t records_ = 0;
  std::uint64_t bytes_ = 0;
  bool finished_ = false;
};

Manifest write_stream(DocumentStream& docs, const std::filesystem::path& path);
Manifest write_all(const std::vector<Document>& docs, const std::filesystem::path& path);

// Counts nonempty lines and bytes of an existing manifest file.
Manifest scan_manifest(const std::filesystem::path& path);

// Bernoulli sampling: each record kept independently with probability
// `rate`. Deterministic given (input order, seed).
class BernoulliSample final : public DocumentStream {
 public:
  BernoulliSample(DocumentStream& input, double rate, std::uint64_t seed);
  std::optional<Document> next() override;

 private:
  DocumentStream& input_;
  double rate_;
  std::mt19937_64 rng_;
};

std::vector<Document> sample_uniform(const std::vector<Document>& docs, double rate,
                                     std::uint64_t seed);

// Reservoir sampling of exactly min(n, |docs|) records, returned in input
// order.
std::vector<Document> sample_count(DocumentStream& docs, std::size_t n, std::uint64_t seed);
std::vector<Document> sample_count(const std::vector<Document>& docs, std::size_t n,
                                   std::uint64_t seed);

}  // namespace datafactory
