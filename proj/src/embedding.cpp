#include "glosshift/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "glosshift/errors.hpp"

namespace glosshift {

std::optional<std::size_t> EmbeddingTable::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void EmbeddingTable::rebuild_index() {
  index_.clear();
  index_.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (!index_.emplace(vocab[i], i).second)
      throw MalformedTable("duplicate token '" + vocab[i] + "' in embedding table");
  }
}

void EmbeddingTable::save_word2vec(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write embedding table '" + path.string() + "'");
  save_word2vec(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void EmbeddingTable::save_word2vec(std::ostream& out) const {
  out << vocab.size() << ' ' << dim << '\n';
  out << std::setprecision(8);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << vocab[i];
    for (float v : row(i)) out << ' ' << v;
    out << '\n';
  }
}

EmbeddingTable EmbeddingTable::load_word2vec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding table '" + path.string() + "'");
  return load_word2vec(in, path.string());
}

EmbeddingTable EmbeddingTable::load_word2vec(std::istream& in, const std::string& what) {
  EmbeddingTable t;
  std::string line;
  if (!std::getline(in, line)) throw MalformedTable("empty embedding table '" + what + "'");
  std::istringstream header(line);
  std::size_t count = 0;
  if (!(header >> count >> t.dim) || t.dim == 0)
    throw MalformedTable("bad word2vec header in '" + what + "'");

  t.vocab.reserve(count);
  t.data.reserve(count * t.dim);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string token;
    if (!(row >> token))
      throw MalformedTable("missing token on line " + std::to_string(line_no) + " of '" + what +
                           "'");
    t.vocab.push_back(token);
    for (std::size_t d = 0; d < t.dim; ++d) {
      float v = 0;
      if (!(row >> v) || !std::isfinite(v))
        throw MalformedTable("bad vector component on line " + std::to_string(line_no) +
                             " of '" + what + "'");
      t.data.push_back(v);
    }
    float extra;
    if (row >> extra)
      throw MalformedTable("too many vector components on line " + std::to_string(line_no) +
                           " of '" + what + "'");
  }
  if (t.vocab.size() != count)
    throw MalformedTable("header of '" + what + "' promises " + std::to_string(count) +
                         " rows but the file has " + std::to_string(t.vocab.size()));
  t.rebuild_index();
  return t;
}

}  // namespace glosshift
