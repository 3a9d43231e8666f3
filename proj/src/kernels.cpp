#include "magphon/kernels.hpp"

#include <cstdlib>

namespace magphon::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MAGPHON_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Variant& select() {
    if (const char* env = std::getenv("MAGPHON_KERNEL")) {
        if (const Variant* v = by_name(env)) return *v;
    }
#if defined(MAGPHON_HAVE_AVX2)
    if (cpu_has_avx2()) return avx2();
#endif
    return scalar();
}

} // namespace

const Variant& active() {
    static const Variant& v = select();
    return v;
}

const Variant* by_name(const std::string& name) {
    if (name == "scalar") return &scalar();
#if defined(MAGPHON_HAVE_AVX2)
    if (name == "avx2" && cpu_has_avx2()) return &avx2();
#endif
    if (name == "auto") {
#if defined(MAGPHON_HAVE_AVX2)
        if (cpu_has_avx2()) return &avx2();
#endif
        return &scalar();
    }
    return nullptr;
}

} // namespace magphon::kernels
