#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace indy3 {

// 0 means "use all hardware threads"; the INDY3_THREADS environment variable
// caps the result either way.
inline unsigned resolve_threads(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("INDY3_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

}  // namespace indy3
