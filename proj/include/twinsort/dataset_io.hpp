#pragma once

// TAS1 dataset container.
//
// Layout, all integers little-endian regardless of host order:
//   offset 0   4 bytes   magic "TAS1"
//   offset 4   1 byte    format version, currently 0x01
//   offset 5   8 bytes   n, element count
//   offset 13  8 bytes   k, inclusive maximum value
//   offset 21  8n bytes  the elements
//
// A file is malformed if the magic or version is wrong, it is shorter than
// its header claims, it has trailing bytes, or any element exceeds k.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinsort/core.hpp"

namespace twinsort {

struct dataset {
    std::uint64_t k = 0;
    std::vector<element> values;
};

inline constexpr std::size_t tas1_header_bytes = 21;
inline constexpr std::uint8_t tas1_version = 0x01;

namespace detail {

inline void append_u64_le(std::string& out, std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
        out.push_back(static_cast<char>((v >> (8 * byte)) & 0xFFu));
    }
}

inline std::uint64_t load_u64_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int byte = 0; byte < 8; ++byte) {
        v |= static_cast<std::uint64_t>(p[byte]) << (8 * byte);
    }
    return v;
}

} // namespace detail

// FNV-1a over the little-endian byte image of the values. Stable across
// platforms, so digests in logs are comparable between machines.
inline std::uint64_t content_digest(std::span<const element> values) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const element v : values) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (v >> (8 * byte)) & 0xFFu;
            hash *= 0x100000001b3ull;
        }
    }
    return hash;
}

inline std::string digest_hex(std::uint64_t digest) {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int nibble = 0; nibble < 16; ++nibble) {
        out[15 - nibble] = hex[(digest >> (4 * nibble)) & 0xFu];
    }
    return out;
}

inline std::string encode_dataset(const dataset& data) {
    std::string bytes;
    bytes.reserve(tas1_header_bytes + 8 * data.values.size());
    bytes.append("TAS1", 4);
    bytes.push_back(static_cast<char>(tas1_version));
    detail::append_u64_le(bytes, data.values.size());
    detail::append_u64_le(bytes, data.k);
    for (const element v : data.values) {
        detail::append_u64_le(bytes, v);
    }
    return bytes;
}

inline dataset decode_dataset(std::string_view bytes) {
    if (bytes.size() < tas1_header_bytes) {
        throw malformed_file("file shorter than the TAS1 header");
    }
    if (bytes.substr(0, 4) != "TAS1") {
        throw malformed_file("bad magic, expected TAS1");
    }
    const auto* raw = reinterpret_cast<const unsigned char*>(bytes.data());
    if (raw[4] != tas1_version) {
        throw malformed_file("unsupported TAS1 version " + std::to_string(raw[4]));
    }
    const std::uint64_t n = detail::load_u64_le(raw + 5);
    dataset data;
    data.k = detail::load_u64_le(raw + 13);
    if (n > (bytes.size() - tas1_header_bytes) / 8) {
        throw malformed_file("file truncated, header claims " + std::to_string(n) +
                             " elements");
    }
    if (bytes.size() != tas1_header_bytes + 8 * n) {
        throw malformed_file("trailing bytes after the last element");
    }
    data.values.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t v = detail::load_u64_le(raw + tas1_header_bytes + 8 * i);
        if (v > data.k) {
            throw malformed_file("element " + std::to_string(i) +
                                 " exceeds recorded maximum");
        }
        data.values.push_back(v);
    }
    return data;
}

inline void write_dataset(const std::filesystem::path& path, const dataset& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    const std::string bytes = encode_dataset(data);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw io_error("write failed for " + path.string());
    }
}

inline dataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path.string() + " for reading");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw io_error("read failed for " + path.string());
    }
    return decode_dataset(bytes);
}

} // namespace twinsort
