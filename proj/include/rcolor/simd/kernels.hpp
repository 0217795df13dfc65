#pragma once

// Bitmask kernels behind the hypergraph intersection queries.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at startup from CPUID; setting the
// environment variable RCOLOR_SIMD=scalar forces the reference path.
// All variants must return identical results (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rcolor::simd {

using Word = std::uint64_t;

enum class Backend { scalar, avx2 };

struct KernelTable
{
    Backend backend;

    /// popcount(a & b) over `words` words.
    std::uint32_t (*intersection_count)(const Word* a, const Word* b, std::size_t words);

    /// (a & b & ~c) != 0 over `words` words.
    bool (*and_andnot_any)(const Word* a, const Word* b, const Word* c, std::size_t words);

    /// out[j] = popcount(a & rows[j]) for `count` rows laid out with stride `words`.
    void (*intersection_counts)(const Word* a, const Word* rows, std::size_t words,
                                std::size_t count, std::uint32_t* out);
};

const KernelTable& scalar_kernels() noexcept;

/// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels() noexcept;

/// True when the running CPU can execute the AVX2 variant.
bool cpu_has_avx2() noexcept;

/// The table currently in use.
const KernelTable& kernels() noexcept;

/// Override the dispatch choice. Throws InvalidArgument if the backend is unavailable.
void select_backend(Backend backend);

/// Re-run the automatic selection (CPUID + RCOLOR_SIMD).
void select_default_backend();

std::string_view backend_name(Backend backend) noexcept;

// Convenience wrappers over kernels().

inline std::uint32_t intersection_count(std::span<const Word> a, std::span<const Word> b) noexcept
{
    return kernels().intersection_count(a.data(), b.data(), a.size());
}

inline bool and_andnot_any(std::span<const Word> a, std::span<const Word> b, std::span<const Word> c) noexcept
{
    return kernels().and_andnot_any(a.data(), b.data(), c.data(), a.size());
}

} // namespace rcolor::simd
