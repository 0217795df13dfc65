#include "rcolor/simd/kernels.hpp"

#include "rcolor/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rcolor::simd {

#if !defined(RCOLOR_BUILD_AVX2)
const KernelTable* avx2_kernels() noexcept { return nullptr; }
#endif

bool cpu_has_avx2() noexcept
{
#if defined(RCOLOR_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

namespace {

const KernelTable* pick_default() noexcept
{
    if (const char* env = std::getenv("RCOLOR_SIMD"); env != nullptr && std::string(env) == "scalar")
        return &scalar_kernels();
    if (cpu_has_avx2() && avx2_kernels() != nullptr)
        return avx2_kernels();
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active()
{
    static std::atomic<const KernelTable*> table{pick_default()};
    return table;
}

} // namespace

const KernelTable& kernels() noexcept
{
    return *active().load(std::memory_order_relaxed);
}

void select_backend(Backend backend)
{
    switch (backend) {
    case Backend::scalar:
        active().store(&scalar_kernels());
        return;
    case Backend::avx2:
        if (avx2_kernels() == nullptr || !cpu_has_avx2())
            throw InvalidArgument("AVX2 kernels are not available on this build or CPU");
        active().store(avx2_kernels());
        return;
    }
}

void select_default_backend()
{
    active().store(pick_default());
}

std::string_view backend_name(Backend backend) noexcept
{
    switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    }
    return "unknown";
}

} // namespace rcolor::simd
