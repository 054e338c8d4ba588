#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace superbbw {

// Error taxonomy surfaced through the CLI exit status.  Parse errors come
// from malformed user input, Precondition from violated mathematical
// preconditions, Limit from enumeration guards.
enum class ErrorKind { Parse, Precondition, Limit, Internal };

class SbwError : public std::runtime_error {
public:
    SbwError(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw SbwError(ErrorKind::Parse, msg); }
[[noreturn]] inline void fail_pre(const std::string& msg) { throw SbwError(ErrorKind::Precondition, msg); }
[[noreturn]] inline void fail_limit(const std::string& msg) { throw SbwError(ErrorKind::Limit, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw SbwError(ErrorKind::Internal, msg); }

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Global enumeration cap.  Overridable through the SUPERBBW_LIMIT
// environment variable; every potentially exponential enumeration checks it.
inline std::size_t enumeration_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("SUPERBBW_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 22;
    }();
    return limit;
}

inline void check_limit(std::size_t requested, const std::string& what) {
    if (requested > enumeration_limit())
        fail_limit(what + " needs " + std::to_string(requested) +
                   " items, over the cap " + std::to_string(enumeration_limit()) +
                   " (set SUPERBBW_LIMIT to raise)");
}

// Deterministic index-sharded parallel map: results are written into a
// preallocated slot per index, so the merge order never depends on thread
// scheduling.  jobs <= 1 runs inline.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace superbbw
