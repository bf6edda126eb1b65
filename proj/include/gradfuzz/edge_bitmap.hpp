#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gradfuzz/errors.hpp"

namespace gradfuzz {

/// Set of control-flow edges covered by one execution, indexed by raw edge id.
class EdgeBitmap {
public:
    EdgeBitmap() = default;
    explicit EdgeBitmap(std::size_t edge_count) : covered_(edge_count, 0) {}

    std::size_t edge_count() const { return covered_.size(); }

    bool test(std::size_t edge) const { return covered_[edge] != 0; }
    void set(std::size_t edge) { covered_[edge] = 1; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : covered_) n += b != 0;
        return n;
    }

    bool empty() const {
        for (auto b : covered_)
            if (b) return false;
        return true;
    }

    void merge(const EdgeBitmap& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < covered_.size(); ++i) covered_[i] |= other.covered_[i];
    }

    /// True iff `other` covers at least one edge absent from this bitmap.
    bool misses_some_of(const EdgeBitmap& other) const {
        check_same_size(other);
        for (std::size_t i = 0; i < covered_.size(); ++i)
            if (other.covered_[i] && !covered_[i]) return true;
        return false;
    }

    std::vector<std::size_t> covered_edges() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < covered_.size(); ++i)
            if (covered_[i]) out.push_back(i);
        return out;
    }

    bool operator==(const EdgeBitmap& other) const { return covered_ == other.covered_; }

    // Shared file format: exactly edge_count bytes, byte i nonzero iff raw
    // edge i covered.
    void write_file(const std::filesystem::path& path) const {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw TargetError("cannot write bitmap file " + path.string());
        out.write(reinterpret_cast<const char*>(covered_.data()),
                  static_cast<std::streamsize>(covered_.size()));
    }

    static EdgeBitmap read_file(const std::filesystem::path& path, std::size_t edge_count) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw TargetError("cannot read bitmap file " + path.string());
        std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                      std::istreambuf_iterator<char>());
        if (raw.size() != edge_count) {
            throw TargetError("bitmap file " + path.string() + " has " +
                              std::to_string(raw.size()) + " bytes, expected " +
                              std::to_string(edge_count));
        }
        EdgeBitmap bm(edge_count);
        for (std::size_t i = 0; i < edge_count; ++i)
            if (raw[i]) bm.set(i);
        return bm;
    }

private:
    void check_same_size(const EdgeBitmap& other) const {
        if (covered_.size() != other.covered_.size()) {
            throw Error("edge_count mismatch: " + std::to_string(covered_.size()) + " vs " +
                        std::to_string(other.covered_.size()));
        }
    }

    std::vector<std::uint8_t> covered_;
};

/// Returns true iff `bitmap` covers a raw edge absent from `global`, and
/// folds the bitmap into `global` either way.
inline bool has_new_coverage(const EdgeBitmap& bitmap, EdgeBitmap& global) {
    const bool fresh = global.misses_some_of(bitmap);
    global.merge(bitmap);
    return fresh;
}

}  // namespace gradfuzz
