#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gradfuzz/errors.hpp"

namespace gradfuzz {

/// A program input padded to a fixed model length. `bytes.size()` always
/// equals the configured model input length m; positions at or beyond
/// `logical_len` are null padding.
struct ByteInput {
    std::vector<std::uint8_t> bytes;
    std::size_t logical_len = 0;

    std::size_t size() const { return bytes.size(); }
};

/// Pads `raw` with null bytes up to length `m`. Inputs longer than `m` are
/// rejected; the campaign drops oversize files instead of truncating them.
inline ByteInput pad_input(std::span<const std::uint8_t> raw, std::size_t m) {
    if (raw.size() > m) {
        throw ConfigError("input of " + std::to_string(raw.size()) +
                          " bytes exceeds model input length " + std::to_string(m));
    }
    ByteInput out;
    out.bytes.assign(m, 0);
    std::copy(raw.begin(), raw.end(), out.bytes.begin());
    out.logical_len = raw.size();
    return out;
}

inline ByteInput pad_input(const std::vector<std::uint8_t>& raw, std::size_t m) {
    return pad_input(std::span<const std::uint8_t>(raw.data(), raw.size()), m);
}

}  // namespace gradfuzz
