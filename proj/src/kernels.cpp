// Runtime kernel selection.

#include "rotlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace rotlab::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Dispatch* pick() {
    if (const char* env = std::getenv("ROTLAB_KERNEL")) {
        if (const Dispatch* d = by_name(env)) return d;
        return &scalar();  // unknown/unsupported request: fall back quietly
    }
    if (const Dispatch* d = detail::avx2_dispatch(); d && cpu_has_avx2()) return d;
    return &scalar();
}

}  // namespace

const Dispatch* by_name(const char* name) {
    if (!name) return nullptr;
    if (std::strcmp(name, "scalar") == 0) return &scalar();
    if (std::strcmp(name, "avx2") == 0) {
        const Dispatch* d = detail::avx2_dispatch();
        return (d && cpu_has_avx2()) ? d : nullptr;
    }
    return nullptr;
}

const Dispatch& active() {
    static const Dispatch* chosen = pick();
    return *chosen;
}

}  // namespace rotlab::kernels
