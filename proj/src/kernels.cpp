#include "maplate/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace maplate::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

namespace {

const Ops* ops_for(Isa isa) {
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return &avx2_ops();
#endif
#if defined(__aarch64__)
        case Isa::neon:
            return &neon_ops();
#endif
        default:
            return &scalar_ops();
    }
}

Isa initial_isa() {
    if (const char* env = std::getenv("MA_PLATE_KERNELS")) {
        const std::string s(env);
        Isa want;
        if (s == "scalar")
            want = Isa::scalar;
        else if (s == "avx2")
            want = Isa::avx2;
        else if (s == "neon")
            want = Isa::neon;
        else
            return detected_isa();
        if (isa_available(want)) return want;
    }
    return detected_isa();
}

Isa g_isa = initial_isa();

}  // namespace

const Ops& active() { return *ops_for(g_isa); }

Isa active_isa() { return g_isa; }

void set_isa(Isa isa) {
    if (!isa_available(isa))
        throw std::invalid_argument("kernels: requested backend not available on this CPU");
    g_isa = isa;
}

}  // namespace maplate::kernels
