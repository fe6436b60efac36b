#pragma once

#include <string>
#include <string_view>

namespace fnd {

// English Snowball (Porter2) stemmer. Input is expected to be a lowercase
// ASCII-alphabetic word; anything else is returned unchanged, as are words
// of length <= 2.
std::string porter2_stem(std::string_view word);

}  // namespace fnd
