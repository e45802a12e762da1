#include "primetab/table_io.hpp"

#include <cassert>
#include <cstring>
#include <fstream>
#include <vector>

#include "primetab/errors.hpp"

namespace primetab::table_io {

void write_table(const std::filesystem::path& path, const PrimeTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string());

    char header[kHeaderBytes];
    std::memcpy(header, kMagic, 4);
    for (int i = 0; i < 8; ++i)
        header[4 + i] = char((table.n >> (8 * i)) & 0xFF);
    out.write(header, kHeaderBytes);

    uint64_t payload_bytes = (table.n + 1 + 7) / 8;
    std::vector<char> payload(payload_bytes, 0);
    auto words = table.bits.words();
    for (uint64_t i = 0; i < payload_bytes; ++i)
        payload[i] = char((words[i >> 3] >> (8 * (i & 7))) & 0xFF);
    out.write(payload.data(), std::streamsize(payload.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

PrimeTable read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    char header[kHeaderBytes];
    in.read(header, kHeaderBytes);
    if (in.gcount() != kHeaderBytes || std::memcmp(header, kMagic, 4) != 0)
        throw MalformedTable("missing or bad header in " + path.string());

    uint64_t n = 0;
    for (int i = 0; i < 8; ++i)
        n |= uint64_t(uint8_t(header[4 + i])) << (8 * i);
    if (n >= uint64_t{1} << 56)
        throw MalformedTable("implausible bound in " + path.string());

    uint64_t payload_bytes = (n + 1 + 7) / 8;
    std::vector<char> payload(payload_bytes);
    in.read(payload.data(), std::streamsize(payload_bytes));
    if (uint64_t(in.gcount()) != payload_bytes)
        throw MalformedTable("truncated payload in " + path.string());
    if (in.peek() != std::ifstream::traits_type::eof())
        throw MalformedTable("trailing bytes in " + path.string());

    PrimeTable table(n);
    auto words = table.bits.words();
    for (uint64_t i = 0; i < payload_bytes; ++i)
        words[i >> 3] |= uint64_t(uint8_t(payload[i])) << (8 * (i & 7));

    // pad bits beyond n land above the bitset's size in its last word, so
    // re-clearing the padding changes nothing iff they were zero
    Bitset copy = table.bits;
    copy.clear_padding();
    if (!(copy == table.bits))
        throw MalformedTable("nonzero pad bits in " + path.string());
    return table;
}

std::optional<uint64_t> first_difference(const PrimeTable& a,
                                         const PrimeTable& b) {
    assert(a.n == b.n);
    return a.bits.first_difference(b.bits);
}

}  // namespace primetab::table_io
