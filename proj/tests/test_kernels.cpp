#include "rcolor/error.hpp"
#include "rcolor/rng.hpp"
#include "rcolor/simd/kernels.hpp"

#include <doctest.h>

#include <bit>
#include <vector>

using namespace rcolor;
using namespace rcolor::simd;

namespace {

std::vector<Word> random_words(Rng& rng, std::size_t n, int density)
{
    std::vector<Word> w(n);
    for (auto& x : w) {
        x = rng.next();
        for (int i = 0; i < density; ++i)
            x &= rng.next();
    }
    return w;
}

std::uint32_t naive_count(const Word* a, const Word* b, std::size_t n)
{
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (int bit = 0; bit < 64; ++bit)
            c += ((a[i] & b[i]) >> bit) & 1;
    return c;
}

} // namespace

TEST_CASE("scalar kernels agree with a bit-by-bit count")
{
    Rng rng(7);
    const KernelTable& s = scalar_kernels();
    for (std::size_t words : {1u, 2u, 3u, 4u, 5u, 8u, 9u}) {
        auto a = random_words(rng, words, 1), b = random_words(rng, words, 0);
        CHECK(s.intersection_count(a.data(), b.data(), words) == naive_count(a.data(), b.data(), words));
    }
}

TEST_CASE("avx2 kernels match scalar on every width")
{
    const KernelTable* v = avx2_kernels();
    if (v == nullptr || !cpu_has_avx2()) {
        MESSAGE("AVX2 variant unavailable; skipping");
        return;
    }
    const KernelTable& s = scalar_kernels();
    Rng rng(11);
    for (std::size_t words = 1; words <= 17; ++words) {
        for (int rep = 0; rep < 200; ++rep) {
            const int dens = rep % 4;
            auto a = random_words(rng, words, dens), b = random_words(rng, words, dens),
                 c = random_words(rng, words, dens);
            REQUIRE(v->intersection_count(a.data(), b.data(), words) ==
                    s.intersection_count(a.data(), b.data(), words));
            REQUIRE(v->and_andnot_any(a.data(), b.data(), c.data(), words) ==
                    s.and_andnot_any(a.data(), b.data(), c.data(), words));
            // c covering a & b exactly makes the difference empty.
            std::vector<Word> cover(words);
            for (std::size_t i = 0; i < words; ++i)
                cover[i] = a[i] & b[i];
            REQUIRE(!v->and_andnot_any(a.data(), b.data(), cover.data(), words));
            REQUIRE(!s.and_andnot_any(a.data(), b.data(), cover.data(), words));
        }
        for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 8u, 13u}) {
            auto a = random_words(rng, words, 1);
            auto rows = random_words(rng, words * count, 1);
            std::vector<std::uint32_t> o1(count + 1, 99), o2(count + 1, 99);
            v->intersection_counts(a.data(), rows.data(), words, count, o1.data());
            s.intersection_counts(a.data(), rows.data(), words, count, o2.data());
            REQUIRE(o1 == o2);
            CHECK(o1[count] == 99); // no write past the end
        }
    }
}

TEST_CASE("all-ones and all-zeros edge cases")
{
    std::vector<Word> ones(6, ~Word{0}), zeros(6, 0);
    for (const KernelTable* t : {&scalar_kernels(), avx2_kernels()}) {
        if (t == nullptr || (t->backend == Backend::avx2 && !cpu_has_avx2()))
            continue;
        CHECK(t->intersection_count(ones.data(), ones.data(), 6) == 384);
        CHECK(t->intersection_count(ones.data(), zeros.data(), 6) == 0);
        CHECK(t->and_andnot_any(ones.data(), ones.data(), zeros.data(), 6));
        CHECK(!t->and_andnot_any(ones.data(), ones.data(), ones.data(), 6));
    }
}

TEST_CASE("backend selection")
{
    select_backend(Backend::scalar);
    CHECK(kernels().backend == Backend::scalar);
    if (avx2_kernels() != nullptr && cpu_has_avx2()) {
        select_backend(Backend::avx2);
        CHECK(kernels().backend == Backend::avx2);
    } else {
        CHECK_THROWS_AS(select_backend(Backend::avx2), InvalidArgument);
    }
    select_default_backend();
    CHECK(backend_name(Backend::avx2) == "avx2");
}
