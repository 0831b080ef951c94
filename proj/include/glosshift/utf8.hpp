#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace glosshift {

// Decodes a UTF-8 string into codepoints. Throws IoError on malformed
// input (truncated sequences, overlong encodings, surrogates).
std::u32string decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(char32_t cp);
std::string encode_utf8(const std::u32string& s);

}  // namespace glosshift
