#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace twosym {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Product with overflow checking (throws std::overflow_error).
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries positive, each dividing the next.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithDecomposition smith_decompose(const IntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of `m`. Zero rows/columns of the
/// normal form are omitted: the zero matrix has no invariants. Arithmetic is
/// exact; overflow throws std::overflow_error.
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m);

}  // namespace twosym
