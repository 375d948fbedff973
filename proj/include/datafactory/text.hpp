#pragma once

// UTF-8 helpers and the text segmentation shared by every stage: code point
// iteration, CJK detection, token counting, paragraph and sentence spans.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace datafactory::text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at `pos`. On malformed input returns
// kReplacementChar and advances past the maximal invalid subpart.
struct Decoded {
  char32_t cp;
  std::size_t length;
  bool valid;
};
Decoded decode_at(std::string_view s, std::size_t pos);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(char32_t cp);

bool is_valid_utf8(std::string_view s);
std::u32string to_u32(std::string_view s);
std::string from_u32(std::u32string_view s);

// Number of code points (invalid bytes count as one each).
std::size_t codepoint_count(std::string_view s);

bool is_cjk(char32_t cp);
bool is_space(char32_t cp);

// Half-open byte range into some source string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// Tokens are maximal runs of non-space, non-CJK code points; each CJK
// character is a token of its own. Used for rates and whitespace+CJK counting.
std::vector<Span> token_spans(std::string_view s);
std::size_t count_tokens(std::string_view s);

// Paragraph spans include their trailing blank-line separator so that
// concatenating all spans reproduces the input byte for byte.
std::vector<Span> paragraph_spans(std::string_view s);

// Sentence spans over `s` (normally one paragraph). A sentence ends after
// 。！？ or after . ! ? followed by whitespace or end of text; trailing
// whitespace belongs to the sentence. Concatenation reproduces the input.
std::vector<Span> sentence_spans(std::string_view s);

std::string_view trim(std::string_view s);
std::string ascii_lower(std::string_view s);

// Lowercases ASCII letters and collapses every whitespace run into a single
// space; leading and trailing whitespace dropped.
std::string canonicalize(std::string_view s);

}  // namespace datafactory::text
