#pragma once

#include <cstddef>
#include <cstdint>

namespace chevkit::kernels {

enum class Path { Auto, Scalar, Avx2 };

/// Forces a code path (tests); Auto picks AVX2 when the CPU has it.
void force_path(Path p);
Path active_path();
bool cpu_has_avx2();

/// popcount(a & b) over n words.
size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n);
/// a & b != 0
bool intersects(const uint64_t* a, const uint64_t* b, size_t n);
/// a & ~b == 0
bool is_subset(const uint64_t* a, const uint64_t* b, size_t n);

/// Batched row-vector times matrix over Z/p, p <= 7, dimension d <= 8.
/// Vectors are stored coordinate-major: in[i*count + k] is coordinate i of vector k.
/// m is d x d row-major. out has the same layout as in.
void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out);

namespace scalar {
size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n);
bool intersects(const uint64_t* a, const uint64_t* b, size_t n);
bool is_subset(const uint64_t* a, const uint64_t* b, size_t n);
void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out);
}  // namespace scalar

namespace avx2 {
size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n);
bool intersects(const uint64_t* a, const uint64_t* b, size_t n);
bool is_subset(const uint64_t* a, const uint64_t* b, size_t n);
void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out);
}  // namespace avx2

}  // namespace chevkit::kernels
