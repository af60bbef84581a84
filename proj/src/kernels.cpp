#include "chevkit/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CHEVKIT_X86 1
#endif

namespace chevkit::kernels {

namespace {
std::atomic<int> forced{(int)Path::Auto};

bool use_avx2() {
  Path p = (Path)forced.load(std::memory_order_relaxed);
  if (p == Path::Scalar) return false;
  return cpu_has_avx2();
}
}  // namespace

bool cpu_has_avx2() {
#ifdef CHEVKIT_X86
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

void force_path(Path p) { forced = (int)p; }

Path active_path() { return use_avx2() ? Path::Avx2 : Path::Scalar; }

namespace scalar {

size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
  size_t c = 0;
  for (size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

bool intersects(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out) {
  for (size_t k = 0; k < count; ++k)
    for (int j = 0; j < d; ++j) {
      unsigned s = 0;
      for (int i = 0; i < d; ++i) s += in[i * count + k] * m[i * d + j];
      out[j * count + k] = (uint8_t)(s % p);
    }
}

}  // namespace scalar

#ifdef CHEVKIT_X86

namespace avx2 {

__attribute__((target("avx2,popcnt"))) size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
  size_t c = 0, i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)), _mm256_loadu_si256((const __m256i*)(b + i)));
    alignas(32) uint64_t w[4];
    _mm256_store_si256((__m256i*)w, x);
    c += _mm_popcnt_u64(w[0]) + _mm_popcnt_u64(w[1]) + _mm_popcnt_u64(w[2]) + _mm_popcnt_u64(w[3]);
  }
  for (; i < n; ++i) c += _mm_popcnt_u64(a[i] & b[i]);
  return c;
}

__attribute__((target("avx2"))) bool intersects(const uint64_t* a, const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_and_si256(_mm256_loadu_si256((const __m256i*)(a + i)), _mm256_loadu_si256((const __m256i*)(b + i)));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

__attribute__((target("avx2"))) bool is_subset(const uint64_t* a, const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256((const __m256i*)(a + i));
    __m256i y = _mm256_loadu_si256((const __m256i*)(b + i));
    if (!_mm256_testc_si256(y, x)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// 16 vectors per step in 16-bit lanes; s <= 8*6*6 so multiply-high by ceil(2^16/p) gives s/p exactly
__attribute__((target("avx2"))) void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p,
                                                uint8_t* out) {
  const __m256i vp = _mm256_set1_epi16(p);
  const __m256i vinv = _mm256_set1_epi16((short)((65536 + p - 1) / p));
  size_t k = 0;
  for (; k + 16 <= count; k += 16) {
    __m256i coord[8];
    for (int i = 0; i < d; ++i) coord[i] = _mm256_cvtepu8_epi16(_mm_loadu_si128((const __m128i*)(in + i * count + k)));
    for (int j = 0; j < d; ++j) {
      __m256i s = _mm256_setzero_si256();
      for (int i = 0; i < d; ++i)
        if (m[i * d + j]) s = _mm256_add_epi16(s, _mm256_mullo_epi16(coord[i], _mm256_set1_epi16(m[i * d + j])));
      __m256i q = _mm256_mulhi_epu16(s, vinv);
      __m256i r = _mm256_sub_epi16(s, _mm256_mullo_epi16(q, vp));
      __m128i lo = _mm256_castsi256_si128(r), hi = _mm256_extracti128_si256(r, 1);
      _mm_storeu_si128((__m128i*)(out + j * count + k), _mm_packus_epi16(lo, hi));
    }
  }
  if (k < count) {
    for (size_t kk = k; kk < count; ++kk)
      for (int j = 0; j < d; ++j) {
        unsigned s = 0;
        for (int i = 0; i < d; ++i) s += in[i * count + kk] * m[i * d + j];
        out[j * count + kk] = (uint8_t)(s % p);
      }
  }
}

}  // namespace avx2

#else

namespace avx2 {
size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n) { return scalar::and_popcount(a, b, n); }
bool intersects(const uint64_t* a, const uint64_t* b, size_t n) { return scalar::intersects(a, b, n); }
bool is_subset(const uint64_t* a, const uint64_t* b, size_t n) { return scalar::is_subset(a, b, n); }
void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out) {
  scalar::matvec_mod(in, count, d, m, p, out);
}
}  // namespace avx2

#endif

size_t and_popcount(const uint64_t* a, const uint64_t* b, size_t n) {
  return use_avx2() ? avx2::and_popcount(a, b, n) : scalar::and_popcount(a, b, n);
}
bool intersects(const uint64_t* a, const uint64_t* b, size_t n) {
  return use_avx2() ? avx2::intersects(a, b, n) : scalar::intersects(a, b, n);
}
bool is_subset(const uint64_t* a, const uint64_t* b, size_t n) {
  return use_avx2() ? avx2::is_subset(a, b, n) : scalar::is_subset(a, b, n);
}
void matvec_mod(const uint8_t* in, size_t count, int d, const uint8_t* m, uint8_t p, uint8_t* out) {
  if (use_avx2())
    avx2::matvec_mod(in, count, d, m, p, out);
  else
    scalar::matvec_mod(in, count, d, m, p, out);
}

}  // namespace chevkit::kernels
