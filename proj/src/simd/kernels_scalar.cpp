#include "rcolor/simd/kernels.hpp"

#include <bit>

namespace rcolor::simd {

namespace {

std::uint32_t intersection_count_scalar(const Word* a, const Word* b, std::size_t words)
{
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < words; ++i)
        count += static_cast<std::uint32_t>(std::popcount(a[i] & b[i]));
    return count;
}

bool and_andnot_any_scalar(const Word* a, const Word* b, const Word* c, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i)
        if ((a[i] & b[i] & ~c[i]) != 0)
            return true;
    return false;
}

void intersection_counts_scalar(const Word* a, const Word* rows, std::size_t words,
                                std::size_t count, std::uint32_t* out)
{
    for (std::size_t j = 0; j < count; ++j)
        out[j] = intersection_count_scalar(a, rows + j * words, words);
}

} // namespace

const KernelTable& scalar_kernels() noexcept
{
    static const KernelTable table{
        Backend::scalar,
        &intersection_count_scalar,
        &and_andnot_any_scalar,
        &intersection_counts_scalar,
    };
    return table;
}

} // namespace rcolor::simd
