#pragma once

#include <mutex>
#include <set>
#include <string>

namespace twistlab::coverage {

// Records which public operations have been exercised; the harness test
// suite asserts that the default scenario set touches all of them.
inline std::mutex& mutex() {
    static std::mutex m;
    return m;
}

inline std::set<std::string>& touched_set() {
    static std::set<std::string> s;
    return s;
}

inline void touch(const char* op) {
    std::lock_guard<std::mutex> lock(mutex());
    touched_set().insert(op);
}

inline std::set<std::string> touched() {
    std::lock_guard<std::mutex> lock(mutex());
    return touched_set();
}

}  // namespace twistlab::coverage
