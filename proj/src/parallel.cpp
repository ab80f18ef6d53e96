#include "qrlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qrlab {

std::size_t worker_count() {
    static const std::size_t cached = [] {
        std::size_t hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        if (const char* env = std::getenv("QRLAB_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) return std::min<std::size_t>(static_cast<std::size_t>(v), hw);
        }
        return hw;
    }();
    return cached;
}

}  // namespace qrlab
