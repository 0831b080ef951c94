#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace glosshift {

// A sentence is an ordered list of whitespace-delimited tokens. Tokens
// never contain whitespace; the empty sentence is valid.
struct Sentence {
  std::vector<std::string> tokens;

  Sentence() = default;
  explicit Sentence(std::vector<std::string> toks) : tokens(std::move(toks)) {}

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const Sentence&) const = default;
};

// Splits a line on ASCII whitespace. Runs of whitespace collapse.
Sentence parse_sentence(std::string_view line);

// Tokens joined by single spaces, no trailing newline.
std::string to_line(const Sentence& s);

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source_id;

  std::size_t size() const { return sentences.size(); }
  bool operator==(const Corpus&) const = default;
};

// One sentence per line, UTF-8, LF line endings. A trailing CR (from
// CRLF input) is stripped.
Corpus read_corpus(const std::filesystem::path& path);
Corpus read_corpus(std::istream& in, std::string source_id);

void write_corpus(const Corpus& c, const std::filesystem::path& path);
void write_corpus(const Corpus& c, std::ostream& out);

}  // namespace glosshift
