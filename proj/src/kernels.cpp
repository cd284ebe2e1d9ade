/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include "ppersist/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace ppersist::kernels {

void axpy_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * x[i] + y[i]) % p);
}

void scale_mod_scalar(uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * y[i] % p);
}

void submul_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t t = static_cast<uint64_t>(c) * x[i] % p;
        uint64_t v = y[i] + p - t;
        y[i] = static_cast<uint32_t>(v >= p ? v - p : v);
    }
}

#if defined(__x86_64__) || defined(_M_X64)

// Residues are carried through doubles: with p < 2^26 and canonical
// inputs, c*x + y < 2^53, so the FMA result is an exactly-represented
// integer. The quotient estimate q = floor(z/p) computed via the rounded
// reciprocal is off by at most one; two conditional corrections land the
// remainder in [0, p).
namespace {

__attribute__((target("avx2,fma"))) inline __m256d reduce_pd(__m256d z, __m256d vp,
                                                             __m256d vinv) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(z, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, z);
    __m256d lt = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(lt, vp));
    __m256d ge = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(ge, vp));
    return r;
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod_avx2(uint32_t* y, const uint32_t* x,
                                                       uint32_t c, std::size_t n, uint32_t p) {
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
        __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        __m256d xd = _mm256_cvtepi32_pd(xi);
        __m256d yd = _mm256_cvtepi32_pd(yi);
        __m256d r = reduce_pd(_mm256_fmadd_pd(vc, xd, yd), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
    }
    if (i < n) axpy_mod_scalar(y + i, x + i, c, n - i, p);
}

__attribute__((target("avx2,fma"))) void scale_mod_avx2(uint32_t* y, uint32_t c, std::size_t n,
                                                        uint32_t p) {
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        __m256d yd = _mm256_cvtepi32_pd(yi);
        __m256d r = reduce_pd(_mm256_mul_pd(vc, yd), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
    }
    if (i < n) scale_mod_scalar(y + i, c, n - i, p);
}

__attribute__((target("avx2,fma"))) void submul_mod_avx2(uint32_t* y, const uint32_t* x,
                                                         uint32_t c, std::size_t n, uint32_t p) {
    // y - c*x ranges over (-2^52, 2^26); shift by q*p after flooring.
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
        __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        __m256d xd = _mm256_cvtepi32_pd(xi);
        __m256d yd = _mm256_cvtepi32_pd(yi);
        __m256d z = _mm256_fnmadd_pd(vc, xd, yd);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i),
                         _mm256_cvttpd_epi32(reduce_pd(z, vp, vinv)));
    }
    if (i < n) submul_mod_scalar(y + i, x + i, c, n - i, p);
}

#endif  // x86_64

namespace {

const Kernels kScalar{axpy_mod_scalar, scale_mod_scalar, submul_mod_scalar, "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
const Kernels kAvx2{axpy_mod_avx2, scale_mod_avx2, submul_mod_avx2, "avx2"};
#endif

bool force_scalar() {
    static const bool forced = [] {
        const char* env = std::getenv("PPERSIST_FORCE_SCALAR");
        return env != nullptr && env[0] == '1';
    }();
    return forced;
}

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return has;
#else
    return false;
#endif
}

}  // namespace

const Kernels& select(uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
    if (!force_scalar() && p < (1u << 26) && cpu_has_avx2_fma()) return kAvx2;
#endif
    (void)p;
    return kScalar;
}

const char* selected_name(uint32_t p) { return select(p).name; }

}  // namespace ppersist::kernels
