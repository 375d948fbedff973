#pragma once

// Deterministic synthetic corpora: a mixed-quality web-like corpus with
// planted defects (duplicates, junk, toxic and personal data, other
// languages), clean reference corpora for the language models, and a small
// supervised augmentation set.

#include <cstdint>
#include <filesystem>
#include <string>

namespace datafactory::synth {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next();
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(double p);

  template <typename C>
  const auto& pick(const C& c) {
    return c[below(c.size())];
  }

 private:
  std::uint64_t seed_;
  std::uint64_t step_ = 0;
};

std::string english_sentence(Rng& rng);
std::string english_paragraph(Rng& rng, std::size_t sentences);
std::string chinese_sentence(Rng& rng);
std::string chinese_paragraph(Rng& rng, std::size_t sentences);
// Words of clean English text in random order.
std::string word_salad(Rng& rng, std::size_t words);

struct BundleOptions {
  std::size_t target_bytes = 10u << 20;
  std::uint64_t seed = 20231101;
  std::size_t reference_en_docs = 1500;
  std::size_t reference_zh_docs = 800;
  std::size_t augment_docs = 300;
};

struct BundlePaths {
  std::filesystem::path corpus;
  std::filesystem::path reference_en;
  std::filesystem::path reference_zh;
  std::filesystem::path augment;
};

// Writes corpus.jsonl, reference_en.jsonl, reference_zh.jsonl and
// augment.jsonl into `dir`.
BundlePaths write_bundle(const std::filesystem::path& dir, const BundleOptions& options = {});

}  // namespace datafactory::synth
