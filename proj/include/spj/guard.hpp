#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spj {

// Thrown when an operation's estimated sparse term count exceeds the cap.
// Estimates are checked before allocation so oversized requests fail fast.
class ResourceError : public std::runtime_error {
public:
    ResourceError(long long estimate, long long cap, const std::string& what_op)
        : std::runtime_error("resource guard: estimated " + std::to_string(estimate) +
                             " terms exceeds cap " + std::to_string(cap) + " in " + what_op),
          estimate(estimate),
          cap(cap) {}

    long long estimate;
    long long cap;
};

struct ResourceGuard {
    long long cap = 10'000'000;

    void require(long long estimate, const char* op) const {
        if (estimate > cap || estimate < 0) throw ResourceError(estimate, cap, op);
    }
};

}  // namespace spj
