#include <random>
#include <vector>

#include "doctest.h"

#include "chevkit/kernels.hpp"

using namespace chevkit::kernels;

namespace {

std::vector<uint64_t> random_bits(std::mt19937_64& rng, size_t n, int sparsity) {
  std::vector<uint64_t> v(n);
  for (auto& w : v) {
    w = rng();
    for (int k = 0; k < sparsity; ++k) w &= rng();
  }
  return v;
}

}  // namespace

TEST_CASE("bitset kernels agree") {
  std::mt19937_64 rng(8);
  bool avx = cpu_has_avx2();
  for (size_t n : {0, 1, 3, 4, 5, 8, 17, 64}) {
    for (int t = 0; t < 50; ++t) {
      auto a = random_bits(rng, n, t % 4), b = random_bits(rng, n, t % 5);
      if (t % 7 == 0)
        for (size_t i = 0; i < n; ++i) b[i] |= a[i];
      size_t pc = scalar::and_popcount(a.data(), b.data(), n);
      size_t ref = 0;
      for (size_t i = 0; i < n; ++i) ref += __builtin_popcountll(a[i] & b[i]);
      CHECK(pc == ref);
      bool in = scalar::intersects(a.data(), b.data(), n);
      bool sub = scalar::is_subset(a.data(), b.data(), n);
      CHECK(in == (ref > 0));
      CHECK(and_popcount(a.data(), b.data(), n) == pc);
      CHECK(intersects(a.data(), b.data(), n) == in);
      CHECK(is_subset(a.data(), b.data(), n) == sub);
      if (t % 7 == 0) CHECK(sub);
      if (avx) {
        CHECK(avx2::and_popcount(a.data(), b.data(), n) == pc);
        CHECK(avx2::intersects(a.data(), b.data(), n) == in);
        CHECK(avx2::is_subset(a.data(), b.data(), n) == sub);
      }
    }
  }
}

TEST_CASE("batched matvec agrees") {
  std::mt19937_64 rng(9);
  bool avx = cpu_has_avx2();
  for (uint8_t p : {2, 3, 5, 7}) {
    for (int d : {4, 6, 8}) {
      for (size_t count : {1, 31, 32, 33, 100}) {
        std::vector<uint8_t> in(d * count), m(d * d), out(d * count), out2(d * count);
        for (auto& x : in) x = rng() % p;
        for (auto& x : m) x = rng() % p;
        scalar::matvec_mod(in.data(), count, d, m.data(), p, out.data());
        for (size_t k = 0; k < count; ++k)
          for (int j = 0; j < d; ++j) {
            int s = 0;
            for (int i = 0; i < d; ++i) s += in[i * count + k] * m[i * d + j];
            CHECK(out[j * count + k] == s % p);
          }
        matvec_mod(in.data(), count, d, m.data(), p, out2.data());
        CHECK(out2 == out);
        if (avx) {
          std::fill(out2.begin(), out2.end(), 0);
          avx2::matvec_mod(in.data(), count, d, m.data(), p, out2.data());
          CHECK(out2 == out);
        }
      }
    }
  }
}

TEST_CASE("forced paths") {
  force_path(Path::Scalar);
  CHECK(active_path() == Path::Scalar);
  if (cpu_has_avx2()) {
    force_path(Path::Avx2);
    CHECK(active_path() == Path::Avx2);
  }
  force_path(Path::Auto);
  CHECK(active_path() == (cpu_has_avx2() ? Path::Avx2 : Path::Scalar));
}
