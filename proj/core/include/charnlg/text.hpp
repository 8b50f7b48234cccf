#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charnlg {

/// Strict UTF-8 decode to Unicode scalar values. Throws DataError on malformed input.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(char32_t cp);
std::string utf8_encode(const std::vector<char32_t>& cps);

std::string trim(std::string_view s);

/// ASCII-only lowercasing; bytes outside A-Z pass through untouched.
std::string ascii_lower(std::string_view s);

/// Case-insensitive (ASCII) substring test.
bool contains_ci(std::string_view haystack, std::string_view needle);

/// Deterministic 64-bit mix (splitmix64 finalizer); used to derive per-item RNG streams.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace charnlg
