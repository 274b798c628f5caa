#include "dks/kernels.hpp"

#include <algorithm>
#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define DKS_X86 1
#endif

namespace dks::kernels {

void maxplus_scalar(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
                    int shift, Cell delta) {
  for (int i = 0; i < a_len; ++i) {
    if (is_absent(a[i])) continue;
    Cell base = a[i] + delta;
    int jlo = std::max(0, shift - i);
    int jhi = std::min(b_len, out_len + shift - i);
    Cell* o = out + i - shift;
    for (int j = jlo; j < jhi; ++j) o[j] = std::max(o[j], base + b[j]);
  }
}

void max_into_scalar(Cell* out, const Cell* a, int len, Cell delta) {
  for (int i = 0; i < len; ++i)
    if (!is_absent(a[i])) out[i] = std::max(out[i], a[i] + delta);
}

#ifdef DKS_X86

__attribute__((target("avx2"))) void maxplus_avx2(Cell* out, int out_len, const Cell* a,
                                                  int a_len, const Cell* b, int b_len, int shift,
                                                  Cell delta) {
  for (int i = 0; i < a_len; ++i) {
    if (is_absent(a[i])) continue;
    Cell base = a[i] + delta;
    int jlo = std::max(0, shift - i);
    int jhi = std::min(b_len, out_len + shift - i);
    Cell* o = out + i - shift;
    __m256i vb = _mm256_set1_epi32(base);
    int j = jlo;
    for (; j + 8 <= jhi; j += 8) {
      __m256i s = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j)), vb);
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(o + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(o + j), _mm256_max_epi32(cur, s));
    }
    for (; j < jhi; ++j) o[j] = std::max(o[j], base + b[j]);
  }
}

__attribute__((target("avx2"))) void max_into_avx2(Cell* out, const Cell* a, int len,
                                                   Cell delta) {
  __m256i vd = _mm256_set1_epi32(delta);
  __m256i zero = _mm256_setzero_si256();
  int i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    // absent lanes keep cur
    __m256i absent = _mm256_cmpgt_epi32(zero, va);
    __m256i cand = _mm256_blendv_epi8(_mm256_add_epi32(va, vd), cur, absent);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epi32(cur, cand));
  }
  for (; i < len; ++i)
    if (!is_absent(a[i])) out[i] = std::max(out[i], a[i] + delta);
}

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

#else

void maxplus_avx2(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
                  int shift, Cell delta) {
  maxplus_scalar(out, out_len, a, a_len, b, b_len, shift, delta);
}
void max_into_avx2(Cell* out, const Cell* a, int len, Cell delta) {
  max_into_scalar(out, a, len, delta);
}
bool avx2_available() { return false; }

#endif

namespace {

struct Dispatch {
  MaxPlusFn maxplus = maxplus_scalar;
  MaxIntoFn max_into = max_into_scalar;
  std::string name = "scalar";
  Dispatch() {
    const char* env = std::getenv("DKS_KERNEL");
    bool want_scalar = env && std::string(env) == "scalar";
    if (!want_scalar && avx2_available()) {
      maxplus = maxplus_avx2;
      max_into = max_into_avx2;
      name = "avx2";
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

void maxplus(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
             int shift, Cell delta) {
  dispatch().maxplus(out, out_len, a, a_len, b, b_len, shift, delta);
}

void max_into(Cell* out, const Cell* a, int len, Cell delta) {
  dispatch().max_into(out, a, len, delta);
}

void normalize(Cell* c, int len) {
  for (int i = 0; i < len; ++i)
    if (c[i] < 0) c[i] = kAbsent;
}

std::string active() { return dispatch().name; }

bool select(const std::string& name) {
  Dispatch& d = dispatch();
  if (name == "scalar") {
    d.maxplus = maxplus_scalar;
    d.max_into = max_into_scalar;
    d.name = name;
    return true;
  }
  if (name == "avx2" && avx2_available()) {
    d.maxplus = maxplus_avx2;
    d.max_into = max_into_avx2;
    d.name = name;
    return true;
  }
  return false;
}

}  // namespace dks::kernels
