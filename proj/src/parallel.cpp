#include "harmonic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace harmonic {

unsigned worker_count()
{
    if (const char* env = std::getenv("HARMONIC_ID_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to the machine default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace harmonic
