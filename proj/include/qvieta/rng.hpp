#pragma once

#include <cstdint>

#include "qvieta/matrix.hpp"

namespace qvieta {

// splitmix64: tiny, fully specified, identical output on every platform.
// Sub-streams are derived by jumping the underlying Weyl sequence, which
// makes individual campaign trials reproducible in isolation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Inclusive bounds. Modulo bias is ~2^-58 for desk-scale ranges and
  // irrelevant here; determinism is what matters.
  long next_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master + (index + 1) * 0x9e3779b97f4a7c15ull);
    return g.next();
  }

 private:
  std::uint64_t state_;
};

// Integer entries uniform in [-bound, bound], drawn row-major.
inline Matrix random_matrix(SplitMix64& rng, int dim, long bound) {
  Matrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = Rational(rng.next_in(-bound, bound));
  return m;
}

}  // namespace qvieta
