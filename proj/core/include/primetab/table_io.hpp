#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "primetab/prime_table.hpp"

namespace primetab::table_io {

// On-disk layout: magic "PTB1", u64 little-endian n, then ceil((n+1)/8)
// payload bytes, bit i LSB-first = primality of i, pad bits zero.
inline constexpr char kMagic[4] = {'P', 'T', 'B', '1'};
inline constexpr size_t kHeaderBytes = 12;

void write_table(const std::filesystem::path& path, const PrimeTable& table);

// Throws MalformedTable on any structural violation (bad magic, size
// mismatch, nonzero pad bits) and std::runtime_error on I/O failure.
PrimeTable read_table(const std::filesystem::path& path);

// Lowest index where two equal-bound tables disagree.
std::optional<uint64_t> first_difference(const PrimeTable& a,
                                         const PrimeTable& b);

}  // namespace primetab::table_io
