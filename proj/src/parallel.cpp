#include "ffva/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ffva {

int default_jobs() {
    const char* env = std::getenv("FFVA_JOBS");
    if (env == nullptr) return 1;
    try {
        const int n = std::stoi(env);
        return n > 0 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace ffva
