#include "jordan/smith.hpp"

#include <cstdlib>
#include <utility>

#include "jordan/error.hpp"

namespace jordan {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in matrix arithmetic");
  return r;
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return r;
}

std::vector<std::int64_t> SmithForm::invariants() const {
  std::vector<std::int64_t> out;
  std::size_t rows = diagonal.size();
  std::size_t cols = rows ? diagonal[0].size() : 0;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.push_back(diagonal[i][i]);
  return out;
}

SmithForm smith_normal_form(IntMatrix const& a) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  for (auto const& row : a)
    if (row.size() != n) throw InvalidArgument("ragged matrix");

  SmithForm f{identity_matrix(m), identity_matrix(m), a, identity_matrix(n)};
  IntMatrix& d = f.diagonal;

  // Every row operation E on d is mirrored on left, and E^{-1} as a column
  // operation on left_inverse.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    std::swap(f.left[i], f.left[j]);
    swap_cols(f.left_inverse, i, j);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    row_axpy(d, dst, src, q);
    row_axpy(f.left, dst, src, q);
    col_axpy(f.left_inverse, src, dst, -q);
  };
  auto swap_columns = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols(d, i, j);
    swap_cols(f.right, i, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    col_axpy(d, dst, src, q);
    col_axpy(f.right, dst, src, q);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (pi == m || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;  // remaining block is zero
      swap_rows(t, pi);
      swap_columns(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        row_op(i, t, d[i][t] / d[t][t]);
        if (d[i][t] != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        col_op(j, t, d[t][j] / d[t][t]);
        if (d[t][j] != 0) cleared = false;
      }
      if (!cleared) continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_op(t, bad, -1);  // row_t += row_bad
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : f.left[t]) x = -x;
      for (auto& row : f.left_inverse) row[t] = -row[t];
    }
  }
done:
  return f;
}

std::int64_t determinant(IntMatrix const& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace jordan
