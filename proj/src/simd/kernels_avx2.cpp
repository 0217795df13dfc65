// AVX2 variants. This file is compiled with -mavx2 -mpopcnt and must only be
// entered after cpu_has_avx2() returned true.

#include "rcolor/simd/kernels.hpp"

#include <immintrin.h>

namespace rcolor::simd {

namespace {

// Per-64-bit-lane popcount (nibble lookup + horizontal byte sums).
inline __m256i popcount_lanes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                          _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i v)
{
    const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s))
         + static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::uint32_t intersection_count_avx2(const Word* a, const Word* b, std::size_t words)
{
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
    }
    std::uint64_t count = horizontal_sum(acc);
    for (; i < words; ++i)
        count += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    return static_cast<std::uint32_t>(count);
}

bool and_andnot_any_avx2(const Word* a, const Word* b, const Word* c, std::size_t words)
{
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        // andnot(c, x) = ~c & x
        const __m256i v = _mm256_andnot_si256(vc, _mm256_and_si256(va, vb));
        if (!_mm256_testz_si256(v, v))
            return true;
    }
    for (; i < words; ++i)
        if ((a[i] & b[i] & ~c[i]) != 0)
            return true;
    return false;
}

void intersection_counts_avx2(const Word* a, const Word* rows, std::size_t words,
                              std::size_t count, std::uint32_t* out)
{
    std::size_t j = 0;
    if (words == 1) {
        // Four rows per vector.
        const __m256i va = _mm256_set1_epi64x(static_cast<long long>(a[0]));
        alignas(32) std::uint64_t lanes[4];
        for (; j + 4 <= count; j += 4) {
            const __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + j));
            _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), popcount_lanes(_mm256_and_si256(va, vr)));
            out[j + 0] = static_cast<std::uint32_t>(lanes[0]);
            out[j + 1] = static_cast<std::uint32_t>(lanes[1]);
            out[j + 2] = static_cast<std::uint32_t>(lanes[2]);
            out[j + 3] = static_cast<std::uint32_t>(lanes[3]);
        }
    }
    for (; j < count; ++j)
        out[j] = intersection_count_avx2(a, rows + j * words, words);
}

} // namespace

const KernelTable* avx2_kernels() noexcept
{
    static const KernelTable table{
        Backend::avx2,
        &intersection_count_avx2,
        &and_andnot_any_avx2,
        &intersection_counts_avx2,
    };
    return &table;
}

} // namespace rcolor::simd
