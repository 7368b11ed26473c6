#include "twosym/smith.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace twosym {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in Smith normal form");
  return out;
}

// row_dst -= k * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(k, m(src, c)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(k, m(r, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
  return out;
}

SmithDecomposition smith_decompose(const IntMatrix& input) {
  IntMatrix d = input;
  IntMatrix u = IntMatrix::identity(input.rows());
  IntMatrix v = IntMatrix::identity(input.cols());
  const std::size_t rows = d.rows(), cols = d.cols();

  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    row_axpy(d, dst, src, k);
    row_axpy(u, dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    col_axpy(d, dst, src, k);
    col_axpy(v, dst, src, k);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (d(r, c) != 0 && (pr == rows || std::llabs(d(r, c)) < std::llabs(d(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        row_op(r, t, d(r, t) / d(t, t));
        dirty |= d(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        col_op(c, t, d(t, c) / d(t, t));
        dirty |= d(t, c) != 0;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      row_op(t, bad_row, -1);
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) = -u(t, c);
    }
  }

#ifndef NDEBUG
  assert(multiply(multiply(u, input), v) == d);
#endif
  return {std::move(u), std::move(d), std::move(v)};
}

std::vector<std::int64_t> smith_normal_form(const IntMatrix& m) {
  const auto decomposition = smith_decompose(m);
  std::vector<std::int64_t> invariants;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i)
    if (decomposition.diagonal(i, i) != 0) invariants.push_back(decomposition.diagonal(i, i));
  return invariants;
}

}  // namespace twosym
