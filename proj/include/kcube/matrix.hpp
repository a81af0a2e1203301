#pragma once

#include <cstdint>
#include <vector>

namespace kcube {

// Dense square matrix over the integers, sized for vertex-count adjacency
// data. Entries are 64-bit so small powers of the coordinate matrices stay
// exact.
struct IntMatrix {
  int n = 0;
  std::vector<long long> data;

  IntMatrix() = default;
  explicit IntMatrix(int n_) : n(n_), data(static_cast<size_t>(n_) * n_, 0) {}

  long long& at(int r, int c) { return data[static_cast<size_t>(r) * n + c]; }
  long long at(int r, int c) const { return data[static_cast<size_t>(r) * n + c]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix mul(const IntMatrix& other) const {
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        long long v = at(i, l);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) out.at(i, j) += v * other.at(l, j);
      }
    return out;
  }

  IntMatrix pow(int e) const {
    IntMatrix out(n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    IntMatrix base = *this;
    while (e > 0) {
      if (e & 1) out = out.mul(base);
      base = base.mul(base);
      e >>= 1;
    }
    return out;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool commutes_with(const IntMatrix& other) const { return mul(other) == other.mul(*this); }

  long long row_sum(int r) const {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += at(r, j);
    return s;
  }
};

} // namespace kcube
