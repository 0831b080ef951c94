#include "glosshift/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "glosshift/errors.hpp"

namespace glosshift {

namespace {
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}
}  // namespace

Sentence parse_sentence(std::string_view line) {
  Sentence s;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) s.tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return s;
}

std::string to_line(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += s.tokens[i];
  }
  return out;
}

Corpus read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
  return read_corpus(in, path.string());
}

Corpus read_corpus(std::istream& in, std::string source_id) {
  Corpus c;
  c.source_id = std::move(source_id);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    c.sentences.push_back(parse_sentence(line));
  }
  return c;
}

void write_corpus(const Corpus& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file '" + path.string() + "'");
  write_corpus(c, out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_corpus(const Corpus& c, std::ostream& out) {
  for (const Sentence& s : c.sentences) {
    out << to_line(s) << '\n';
  }
}

}  // namespace glosshift
