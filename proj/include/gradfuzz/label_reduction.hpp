#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "gradfuzz/edge_bitmap.hpp"
#include "gradfuzz/errors.hpp"

namespace gradfuzz {

/// Dimensionality reduction for training labels: raw edges that co-occur
/// identically across every training bitmap are merged into one label, and
/// edges never covered in the training set are dropped. Rebuilt from scratch
/// at every retraining iteration, so merged labels may split as coverage
/// data accumulates.
struct LabelReduction {
    // raw edge id -> merged label id; never-covered edges are absent.
    std::unordered_map<std::size_t, std::size_t> raw_to_label;
    // merged label id -> lowest raw edge id in the merged set.
    std::vector<std::size_t> representative;
    std::size_t label_count = 0;
    std::size_t source_edge_count = 0;
};

/// Partitions the ever-covered raw edges by identical coverage column over
/// `bitmaps`. Label ids are dense and assigned in ascending order of the
/// group's lowest raw edge id.
inline LabelReduction build_reduction(const std::vector<EdgeBitmap>& bitmaps) {
    if (bitmaps.empty()) throw Error("build_reduction requires at least one bitmap");
    const std::size_t edge_count = bitmaps[0].edge_count();
    for (const auto& bm : bitmaps) {
        if (bm.edge_count() != edge_count)
            throw Error("build_reduction: bitmaps disagree on edge_count");
    }

    LabelReduction r;
    r.source_edge_count = edge_count;

    const std::size_t n = bitmaps.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> column(words);
    std::map<std::vector<std::uint64_t>, std::size_t> column_to_label;

    for (std::size_t edge = 0; edge < edge_count; ++edge) {
        std::fill(column.begin(), column.end(), 0);
        bool ever = false;
        for (std::size_t s = 0; s < n; ++s) {
            if (bitmaps[s].test(edge)) {
                column[s / 64] |= std::uint64_t{1} << (s % 64);
                ever = true;
            }
        }
        if (!ever) continue;
        auto [it, inserted] = column_to_label.try_emplace(column, r.label_count);
        if (inserted) {
            r.representative.push_back(edge);
            ++r.label_count;
        }
        r.raw_to_label.emplace(edge, it->second);
    }
    return r;
}

/// Applies a reduction to one bitmap: label bit i is set iff the label's
/// representative raw edge is covered.
inline std::vector<std::uint8_t> reduce(const EdgeBitmap& bitmap, const LabelReduction& r) {
    if (bitmap.edge_count() != r.source_edge_count)
        throw Error("reduce: bitmap edge_count does not match the reduction's source");
    std::vector<std::uint8_t> labels(r.label_count, 0);
    for (std::size_t label = 0; label < r.label_count; ++label)
        labels[label] = bitmap.test(r.representative[label]) ? 1 : 0;
    return labels;
}

}  // namespace gradfuzz
