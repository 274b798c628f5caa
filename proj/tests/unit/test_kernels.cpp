#include <random>

#include "doctest.h"
#include "dks/kernels.hpp"

using namespace dks;

namespace {

std::vector<Cell> random_cells(std::mt19937_64& rng, int len) {
  std::vector<Cell> v(len);
  for (Cell& c : v) c = rng() % 4 == 0 ? kAbsent : static_cast<Cell>(rng() % 50);
  return v;
}

}  // namespace

TEST_CASE("scalar max-plus by definition") {
  std::vector<Cell> a{0, kAbsent, 2}, b{1, 3}, out(4, kAbsent);
  kernels::maxplus_scalar(out.data(), 4, a.data(), 3, b.data(), 2, 0, 1);
  CHECK(out[0] == 2);
  CHECK(out[1] == 4);
  CHECK(out[2] == 4);
  CHECK(out[3] == 6);
}

TEST_CASE("avx2 kernels equal scalar kernels") {
  if (!kernels::avx2_available()) return;
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    int al = 1 + rng() % 40, bl = 1 + rng() % 40, ol = 1 + rng() % 80;
    int shift = rng() % 4;
    Cell delta = rng() % 5;
    auto a = random_cells(rng, al), b = random_cells(rng, bl), base = random_cells(rng, ol);
    auto s = base, v = base;
    kernels::maxplus_scalar(s.data(), ol, a.data(), al, b.data(), bl, shift, delta);
    kernels::maxplus_avx2(v.data(), ol, a.data(), al, b.data(), bl, shift, delta);
    kernels::normalize(s.data(), ol);
    kernels::normalize(v.data(), ol);
    CHECK(s == v);

    int len = 1 + rng() % 50;
    auto x = random_cells(rng, len), o1 = random_cells(rng, len);
    auto o2 = o1;
    kernels::max_into_scalar(o1.data(), x.data(), len, delta);
    kernels::max_into_avx2(o2.data(), x.data(), len, delta);
    kernels::normalize(o1.data(), len);
    kernels::normalize(o2.data(), len);
    CHECK(o1 == o2);
  }
}

TEST_CASE("kernel selection") {
  std::string before = kernels::active();
  CHECK(kernels::select("scalar"));
  CHECK(kernels::active() == "scalar");
  CHECK_FALSE(kernels::select("bogus"));
  kernels::select(before);
}
