#pragma once

// Byte-level BPE vocabulary (GPT-2 vocab.json + merges.txt format) with an
// appended list of extension tokens and embedding initialization for them.

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace datafactory::tok {

using TokenId = std::uint32_t;

class Vocab {
 public:
  static Vocab load(const std::filesystem::path& vocab_json, const std::filesystem::path& merges_txt);
  // Base files plus an extension list (one token per line).
  static Vocab load(const std::filesystem::path& vocab_json, const std::filesystem::path& merges_txt,
                    const std::filesystem::path& extension_list);

  std::size_t size() const { return tokens_.size(); }
  std::size_t base_size() const { return base_size_; }
  std::size_t extension_count() const { return tokens_.size() - base_size_; }

  TokenId eos_id() const { return eos_; }
  TokenId pad_id() const { return pad_; }
  TokenId unk_id() const { return unk_; }
  bool is_special(TokenId id) const { return id == eos_ || id == pad_ || id == unk_; }
  bool is_extension(TokenId id) const { return id >= base_size_ && id < tokens_.size(); }

  // Raw bytes of a token (specials give their literal name).
  const std::string& token_bytes(TokenId id) const { return tokens_.at(id); }
  // Base-vocabulary ids of an extension token.
  const std::vector<TokenId>& decomposition(TokenId id) const;
  const std::vector<std::string>& extension_tokens() const { return extensions_; }

  // Extension strings are matched longest-first; the text between matches
  // goes through byte-level BPE. Never emits special ids.
  std::vector<TokenId> encode(std::string_view text) const;
  std::vector<TokenId> encode_base(std::string_view text) const;
  // Throws Error on an id outside the vocabulary.
  std::string decode(std::span<const TokenId> ids) const;

  // Appends tokens in order. Throws Error on an empty token, a duplicate,
  // or a token the base vocabulary already encodes as a single id.
  Vocab extend(const std::vector<std::string>& new_tokens) const;

  // Stable 64-bit fingerprint of the token table (base and extension).
  std::uint64_t hash() const;

 private:
  struct Trie;
  void encode_segment(std::string_view segment, std::vector<TokenId>& out) const;
  void bpe(std::string_view piece, std::vector<TokenId>& out) const;

  std::vector<std::string> tokens_;
  std::size_t base_size_ = 0;
  std::unordered_map<std::string, TokenId> regular_;  // base, non-special
  std::array<TokenId, 256> byte_ids_{};
  // (left << 32 | right) -> (rank << 32 | merged id)
  std::unordered_map<std::uint64_t, std::uint64_t> merges_;
  TokenId eos_ = 0, pad_ = 0, unk_ = 0;
  std::vector<std::string> extensions_;
  std::vector<std::vector<TokenId>> decompositions_;
  std::shared_ptr<const Trie> trie_;
};

// Splits text into pretokens with the GPT-2 pattern (contractions, optional
// leading space + letters / digits / other, whitespace runs).
std::vector<std::string_view> pretokenize(std::string_view text);

struct EmbeddingMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<double> values;  // row-major

  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t r, std::size_t d) : rows(r), dim(d), values(r * d, 0.0) {}
  std::span<double> row(std::size_t i) { return {values.data() + i * dim, dim}; }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }

  // Binary: magic "DFEMB001", u64 rows, u64 dim, then f64 values.
  void save(const std::filesystem::path& path) const;
  static EmbeddingMatrix load(const std::filesystem::path& path);
  static EmbeddingMatrix random(std::size_t rows, std::size_t dim, std::uint64_t seed);
};

// Base rows copied; each extension row is the uniform mean of the rows of
// its decomposition.
EmbeddingMatrix init_extension_embeddings(const EmbeddingMatrix& base, const Vocab& vocab);

// tokens under a / tokens under b over the same texts.
double encoding_efficiency(std::span<const std::string> corpus, const Vocab& a, const Vocab& b);

}  // namespace datafactory::tok
