#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shapecap::text {

// Lowercases, turns every punctuation character into a separator and splits
// on whitespace. Shared by the captioner and the metrics.
std::vector<std::string> tokenize(std::string_view sentence);

std::string join(const std::vector<std::string>& tokens);

inline constexpr int kPad = 0;
inline constexpr int kBos = 1;
inline constexpr int kEos = 2;
inline constexpr int kUnk = 3;
inline constexpr int kReservedTokens = 4;

class Vocabulary {
 public:
  Vocabulary();

  // Reserved tokens plus every distinct token of the sentences, sorted.
  static Vocabulary build(const std::vector<std::string>& sentences);

  // Returns the token's index, adding it if new. Tokens must be lowercase,
  // non-empty and free of whitespace.
  int add(const std::string& token);
  int index(const std::string& token) const;  // kUnk when absent
  bool contains(const std::string& token) const { return lookup_.count(token) != 0; }
  const std::string& token(int index) const;
  int size() const { return static_cast<int>(tokens_.size()); }

  // One token per line; line k holds index k, the first four lines being the
  // reserved tokens.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> lookup_;
};

// Token indices framed by kBos ... kEos.
struct TokenSequence {
  std::vector<int> ids;

  int length() const { return static_cast<int>(ids.size()) - 2; }
  // Throws std::invalid_argument unless the sequence is framed and every
  // index is below vocab_size.
  void validate(int vocab_size) const;

  bool operator==(const TokenSequence&) const = default;
};

TokenSequence encode(const Vocabulary& vocab, std::string_view sentence);
// Words between the frame markers; reserved tokens are dropped.
std::vector<std::string> decode(const Vocabulary& vocab, const TokenSequence& sequence);

}  // namespace shapecap::text
