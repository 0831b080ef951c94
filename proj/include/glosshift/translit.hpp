#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "glosshift/text.hpp"

namespace glosshift {

inline const std::vector<std::string> kDefaultSpecialTokens = {"[CLS]", "[SEP]", "[MASK]",
                                                               "[PAD]", "[UNK]"};

// Character-level bijection into the Unicode Private Use Area
// (U+E000..U+F8FF). Images are assigned in first-appearance order and
// never collide with the domain, so the map is exactly invertible and
// the rescripted text shares no characters with the original. Special
// tokens map to themselves. Instances are immutable; use
// TranslitMapBuilder for the discovery pass.
class TranslitMap {
 public:
  static constexpr char32_t kImageBase = 0xE000;
  static constexpr char32_t kImageLast = 0xF8FF;

  TranslitMap() = default;

  std::size_t size() const { return fwd_.size(); }
  const std::vector<std::string>& special_tokens() const { return specials_order_; }
  bool is_special(const std::string& token) const { return specials_.count(token) != 0; }

  // Throws UnmappedCharacter for characters outside the map.
  char32_t map_char(char32_t c) const;
  char32_t unmap_char(char32_t c) const;

  std::string map_token(const std::string& token) const;
  std::string unmap_token(const std::string& token) const;

  Sentence apply(const Sentence& s) const;
  Sentence invert(const Sentence& s) const;

  // File format: one header line "specials<TAB>tok1<TAB>tok2...", then
  // one "source<TAB>target" codepoint pair per line, UTF-8.
  void save(const std::filesystem::path& path) const;
  static TranslitMap load(const std::filesystem::path& path);

 private:
  friend class TranslitMapBuilder;

  std::unordered_map<char32_t, char32_t> fwd_;
  std::unordered_map<char32_t, char32_t> rev_;
  std::vector<char32_t> domain_order_;  // first-appearance order
  std::unordered_set<std::string> specials_;
  std::vector<std::string> specials_order_;
};

// Discovery pass: feed the corpus, then build(). Characters get images
// from the PUA block in first-appearance order, skipping codepoints
// that occur anywhere in the domain. Throws AlphabetOverflow when the
// block cannot hold the alphabet.
class TranslitMapBuilder {
 public:
  explicit TranslitMapBuilder(std::vector<std::string> special_tokens = kDefaultSpecialTokens);

  void add(const std::string& token);
  void add(const Sentence& s);
  void add(const Corpus& c);

  TranslitMap build() const;

 private:
  std::unordered_set<char32_t> seen_;
  std::vector<char32_t> order_;
  std::vector<std::string> specials_order_;
  std::unordered_set<std::string> specials_;
};

TranslitMap build_translit_map(const Corpus& c,
                               std::vector<std::string> special_tokens = kDefaultSpecialTokens);

}  // namespace glosshift
