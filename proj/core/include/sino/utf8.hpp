#pragma once

#include <string>
#include <string_view>

#include "sino/types.hpp"

namespace sino::utf8 {

// Throws InputError on malformed sequences.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
std::string encode(Codepoint cp);

}  // namespace sino::utf8
