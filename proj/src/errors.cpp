#include "glosshift/errors.hpp"

namespace glosshift {

namespace {
std::string list_tokens(const std::vector<std::string>& toks) {
  std::string s;
  for (std::size_t i = 0; i < toks.size() && i < 8; ++i) {
    if (i) s += ", ";
    s += "'" + toks[i] + "'";
  }
  if (toks.size() > 8) s += ", ...";
  return s;
}
}  // namespace

MissingToken::MissingToken(std::vector<std::string> toks)
    : Error("tokens missing from the embedding table: " + list_tokens(toks)),
      tokens(std::move(toks)) {}

}  // namespace glosshift
