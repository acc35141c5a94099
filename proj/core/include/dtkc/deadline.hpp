#pragma once

#include <chrono>

namespace dtkc {

// Wall-clock stop signal. A disabled deadline never expires, which is what
// deterministic mode uses throughout.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    static Deadline never() { return Deadline(); }

    static Deadline at(clock::time_point tp) {
        Deadline d;
        d.enabled_ = true;
        d.when_ = tp;
        return d;
    }

    static Deadline after(double seconds) {
        return at(clock::now() + std::chrono::duration_cast<clock::duration>(
                                     std::chrono::duration<double>(seconds)));
    }

    bool expired() const { return enabled_ && clock::now() >= when_; }

    bool enabled() const { return enabled_; }

private:
    Deadline() = default;
    bool enabled_ = false;
    clock::time_point when_{};
};

} // namespace dtkc
