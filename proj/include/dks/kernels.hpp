#pragma once

#include <cstdint>
#include <string>

namespace dks {

using Cell = std::int32_t;

// Table cells below zero mean ABSENT; kAbsent is the canonical form.
inline constexpr Cell kAbsent = -(1 << 29);
inline bool is_absent(Cell c) { return c < 0; }

namespace kernels {

// out[i + j - shift] = max(out[i + j - shift], a[i] + b[j] + delta) over all
// i, j with the target index inside [0, out_len). ABSENT a[i] are skipped.
using MaxPlusFn = void (*)(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b,
                           int b_len, int shift, Cell delta);
// out[i] = max(out[i], a[i] + delta), ABSENT a[i] skipped.
using MaxIntoFn = void (*)(Cell* out, const Cell* a, int len, Cell delta);

void maxplus_scalar(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
                    int shift, Cell delta);
void maxplus_avx2(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
                  int shift, Cell delta);
void max_into_scalar(Cell* out, const Cell* a, int len, Cell delta);
void max_into_avx2(Cell* out, const Cell* a, int len, Cell delta);

bool avx2_available();

// Dispatched entry points. Selection happens once: AVX2 when the CPU has it
// and DKS_KERNEL is not "scalar".
void maxplus(Cell* out, int out_len, const Cell* a, int a_len, const Cell* b, int b_len,
             int shift, Cell delta);
void max_into(Cell* out, const Cell* a, int len, Cell delta);

// Maps every negative cell to kAbsent.
void normalize(Cell* c, int len);

std::string active();
// "scalar" or "avx2"; returns false when the request cannot be honoured.
bool select(const std::string& name);

}  // namespace kernels
}  // namespace dks
