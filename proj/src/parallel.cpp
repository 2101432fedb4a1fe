#include "asca/parallel.hpp"

#include <cstdlib>
#include <string>

namespace asca {

int default_threads() {
    if (const char* env = std::getenv("ASCA_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max(1, int(std::thread::hardware_concurrency()));
}

}  // namespace asca
