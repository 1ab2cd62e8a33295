#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace twistcoh {

// Dense row-major integer matrix, used for exponent sums and conjugation data.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows == 0 ? 0 : init.begin()->size();
    for (const auto& row : init)
      for (long x : row) entries.push_back(x);
  }

  long& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  long operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool square() const { return rows == cols; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

}  // namespace twistcoh
