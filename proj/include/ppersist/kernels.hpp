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

#ifndef PPERSIST_KERNELS_HPP
#define PPERSIST_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Row kernels for dense Z/p elimination. All residues are canonical
// (< p) on entry and exit. Scalar reference versions accept any prime
// p < 2^31; the AVX2 variants require p < 2^26 (products must stay
// exact in double precision) and the dispatcher enforces that bound.

namespace ppersist::kernels {

// y[i] <- (y[i] + c * x[i]) mod p
void axpy_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p);
// y[i] <- (c * y[i]) mod p
void scale_mod_scalar(uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
// y[i] <- (y[i] - c * x[i]) mod p
void submul_mod_scalar(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_mod_avx2(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p);
void scale_mod_avx2(uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
void submul_mod_avx2(uint32_t* y, const uint32_t* x, uint32_t c, std::size_t n, uint32_t p);
#endif

struct Kernels {
    void (*axpy_mod)(uint32_t*, const uint32_t*, uint32_t, std::size_t, uint32_t);
    void (*scale_mod)(uint32_t*, uint32_t, std::size_t, uint32_t);
    void (*submul_mod)(uint32_t*, const uint32_t*, uint32_t, std::size_t, uint32_t);
    const char* name;
};

/// Kernels usable for the given modulus on this CPU. Selection happens at
/// runtime (CPUID); PPERSIST_FORCE_SCALAR=1 in the environment pins the
/// scalar reference versions.
const Kernels& select(uint32_t p);

/// Name of the implementation select() would hand out for this modulus.
const char* selected_name(uint32_t p);

}  // namespace ppersist::kernels

#endif
