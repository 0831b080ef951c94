#include "glosshift/translit.hpp"

#include <cstdio>
#include <fstream>

#include "glosshift/errors.hpp"
#include "glosshift/utf8.hpp"

namespace glosshift {

namespace {
std::string uplus(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
  return buf;
}
}  // namespace

char32_t TranslitMap::map_char(char32_t c) const {
  auto it = fwd_.find(c);
  if (it == fwd_.end()) {
    throw UnmappedCharacter("character " + uplus(c) + " (" + encode_utf8(c) +
                            ") is not in the transliteration map");
  }
  return it->second;
}

char32_t TranslitMap::unmap_char(char32_t c) const {
  auto it = rev_.find(c);
  if (it == rev_.end()) {
    throw UnmappedCharacter("character " + uplus(c) +
                            " has no preimage in the transliteration map");
  }
  return it->second;
}

std::string TranslitMap::map_token(const std::string& token) const {
  if (is_special(token)) return token;
  std::string out;
  for (char32_t c : decode_utf8(token)) append_utf8(out, map_char(c));
  return out;
}

std::string TranslitMap::unmap_token(const std::string& token) const {
  if (is_special(token)) return token;
  std::string out;
  for (char32_t c : decode_utf8(token)) append_utf8(out, unmap_char(c));
  return out;
}

Sentence TranslitMap::apply(const Sentence& s) const {
  Sentence out;
  out.tokens.reserve(s.size());
  for (const auto& t : s.tokens) out.tokens.push_back(map_token(t));
  return out;
}

Sentence TranslitMap::invert(const Sentence& s) const {
  Sentence out;
  out.tokens.reserve(s.size());
  for (const auto& t : s.tokens) out.tokens.push_back(unmap_token(t));
  return out;
}

void TranslitMap::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write transliteration map '" + path.string() + "'");
  out << "specials";
  for (const auto& t : specials_order_) out << '\t' << t;
  out << '\n';
  for (char32_t c : domain_order_) {
    out << encode_utf8(c) << '\t' << encode_utf8(fwd_.at(c)) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

TranslitMap TranslitMap::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open transliteration map '" + path.string() + "'");
  TranslitMap m;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty transliteration map '" + path.string() + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t pos = 0;
  bool first = true;
  while (pos <= line.size()) {
    const std::size_t tab = line.find('\t', pos);
    const std::string field = line.substr(pos, tab == std::string::npos ? tab : tab - pos);
    if (first) {
      if (field != "specials")
        throw IoError("bad transliteration map header in '" + path.string() + "'");
      first = false;
    } else if (!field.empty()) {
      if (m.specials_.insert(field).second) m.specials_order_.push_back(field);
    }
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw IoError("missing tab on line " + std::to_string(line_no) + " of '" + path.string() +
                    "'");
    const std::u32string src = decode_utf8(std::string_view(line).substr(0, tab));
    const std::u32string dst = decode_utf8(std::string_view(line).substr(tab + 1));
    if (src.size() != 1 || dst.size() != 1)
      throw IoError("expected a single codepoint pair on line " + std::to_string(line_no) +
                    " of '" + path.string() + "'");
    if (!m.fwd_.emplace(src[0], dst[0]).second)
      throw IoError("duplicate source character on line " + std::to_string(line_no) + " of '" +
                    path.string() + "'");
    if (!m.rev_.emplace(dst[0], src[0]).second)
      throw IoError("duplicate target character on line " + std::to_string(line_no) + " of '" +
                    path.string() + "'");
    m.domain_order_.push_back(src[0]);
  }
  return m;
}

TranslitMapBuilder::TranslitMapBuilder(std::vector<std::string> special_tokens)
    : specials_order_(std::move(special_tokens)) {
  specials_.insert(specials_order_.begin(), specials_order_.end());
}

void TranslitMapBuilder::add(const std::string& token) {
  if (specials_.count(token)) return;
  for (char32_t c : decode_utf8(token)) {
    if (seen_.insert(c).second) order_.push_back(c);
  }
}

void TranslitMapBuilder::add(const Sentence& s) {
  for (const auto& t : s.tokens) add(t);
}

void TranslitMapBuilder::add(const Corpus& c) {
  for (const auto& s : c.sentences) add(s);
}

TranslitMap TranslitMapBuilder::build() const {
  TranslitMap m;
  m.specials_ = specials_;
  m.specials_order_ = specials_order_;
  m.domain_order_ = order_;
  char32_t next = TranslitMap::kImageBase;
  for (char32_t c : order_) {
    // keep the image block disjoint from the domain
    while (next <= TranslitMap::kImageLast && seen_.count(next)) ++next;
    if (next > TranslitMap::kImageLast) {
      throw AlphabetOverflow("alphabet of " + std::to_string(order_.size()) +
                             " characters exceeds the private-use block capacity");
    }
    m.fwd_.emplace(c, next);
    m.rev_.emplace(next, c);
    ++next;
  }
  return m;
}

TranslitMap build_translit_map(const Corpus& c, std::vector<std::string> special_tokens) {
  TranslitMapBuilder b(std::move(special_tokens));
  b.add(c);
  return b.build();
}

}  // namespace glosshift
