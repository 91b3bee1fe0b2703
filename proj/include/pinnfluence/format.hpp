#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pinnfluence {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// Strict parse of a full decimal string; throws ValidationError otherwise.
double parse_double(std::string_view text);

// Lower-case hex git blob id (SHA-1 over "blob <len>\0" + content).
std::string git_blob_hash(std::string_view content);

// FNV-1a over the raw bytes of the values.
std::uint64_t fingerprint(const double* data, std::size_t n) noexcept;

}  // namespace pinnfluence
