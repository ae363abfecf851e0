#pragma once

#include <chrono>
#include <optional>

#include "zemor/errors.hpp"

namespace zemor {

/// Cooperative wall-clock limit. Long-running loops call check().
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline never() { return Deadline{}; }
    static Deadline after(Clock::duration budget) { return Deadline{Clock::now() + budget}; }

    bool expired() const { return at_ && Clock::now() >= *at_; }

    void check() const {
        if (expired()) throw Timeout{};
    }

private:
    explicit Deadline(Clock::time_point at) : at_(at) {}

    std::optional<Clock::time_point> at_;
};

}  // namespace zemor
