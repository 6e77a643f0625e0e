#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lognq {

// Lowercases and splits on whitespace; every punctuation character becomes
// its own token ("backyard." -> "backyard", "."). Bytes >= 0x80 are kept as
// word characters so multi-byte UTF-8 sequences stay intact.
std::vector<std::string> tokenize(std::string_view text);

// Canonical form of a passage: its tokens joined by single spaces.
std::string normalize(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace lognq
