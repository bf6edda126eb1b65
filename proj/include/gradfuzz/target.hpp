#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>

#include "gradfuzz/byte_input.hpp"
#include "gradfuzz/edge_bitmap.hpp"

namespace gradfuzz {

enum class Verdict { ok, crash, timeout };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::crash: return "crash";
        case Verdict::timeout: return "timeout";
    }
    return "?";
}

struct ExecutionRecord {
    ByteInput input;
    EdgeBitmap bitmap;
    std::chrono::microseconds wall_time{0};
    Verdict verdict = Verdict::ok;
};

/// A program under test. Synthetic targets are pure functions of the input
/// bytes; the external adapter shells out to an instrumented binary speaking
/// the bitmap file protocol.
class TargetProgram {
public:
    virtual ~TargetProgram() = default;

    virtual const std::string& name() const = 0;
    virtual std::size_t edge_count() const = 0;
    virtual ExecutionRecord execute(const ByteInput& input) = 0;
    virtual bool synthetic() const = 0;

    /// Ground-truth union of every edge reachable by some input. Only
    /// synthetic targets can answer this.
    virtual EdgeBitmap reachable_edges() const {
        throw Error("reachable_edges is unsupported for target " + name());
    }
};

}  // namespace gradfuzz
