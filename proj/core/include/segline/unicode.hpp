#pragma once

#include <string>
#include <string_view>

namespace segline {

/// Decodes UTF-8 into a sequence of Unicode scalar values.
/// Throws segline::Error on malformed input.
std::u32string utf8_decode(std::string_view utf8);

/// Encodes Unicode scalar values back to UTF-8.
std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t c);

}  // namespace segline
