#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// mt19937_64 with a bounded draw that does not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

struct GenSpec {
  int n = 0;
  int b = 1;
  double rho = 1.0;
  std::uint64_t seed = 1;
  int blocks = 1;  // outerplanar: number of blocks glued at cutpoints
};

struct Generated {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;  // ccw, empty when not produced
  std::vector<Vertex> outer_face;             // empty when not produced
};

Generated gen_outerplanar(const GenSpec& spec);
Generated gen_bouterplanar(const GenSpec& spec);
Generated gen_planar(const GenSpec& spec);

}  // namespace dks
