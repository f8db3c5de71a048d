#include "schrom/integer_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace schrom {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<long long> values)
    : IntegerMatrix(rows, cols) {
  if (values.size() != rows * cols) throw InputError("initializer does not match dimensions");
  std::size_t k = 0;
  for (long long v : values) data_[k++] = v;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

IntegerMatrix IntegerMatrix::from_sparse(const SparseMatrix& m) {
  IntegerMatrix out(m.rows, m.cols);
  for (const auto& t : m.entries) out(t.row, t.col) += t.value;
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::column(std::size_t c) const {
  IntegerMatrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

namespace {

struct Overflow {};

// Arithmetic shims: int64 traps on overflow, Integer never overflows.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Overflow{};
  }
  return out;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
inline Integer sub_mul(const Integer& a, const Integer& q, const Integer& b) { return a - q * b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer magnitude(const Integer& a) { return abs(a); }

template <class T>
using DenseRows = std::vector<std::vector<T>>;

// Smith normal form of a dense matrix; returns the nonzero diagonal.
template <class T>
std::vector<T> dense_snf(DenseRows<T> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<T> diagonal;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = rows;
    std::size_t pc = cols;
    T best = 0;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        T mag = magnitude(a[r][c]);
        if (pr == rows || mag < best) {
          best = mag;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        T q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) {
          if (a[t][c] != 0) a[r][c] = sub_mul(a[r][c], q, a[t][c]);
        }
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        T q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) {
          if (a[r][t] != 0) a[r][c] = sub_mul(a[r][c], q, a[r][t]);
        }
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) {
        // a remainder is now smaller than the pivot; bring it to (t, t)
        std::size_t br = t;
        std::size_t bc = t;
        T mag = magnitude(a[t][t]);
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (a[r][t] != 0 && magnitude(a[r][t]) < mag) {
            mag = magnitude(a[r][t]);
            br = r;
            bc = t;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[t][c] != 0 && magnitude(a[t][c]) < mag) {
            mag = magnitude(a[t][c]);
            br = t;
            bc = c;
          }
        }
        std::swap(a[t], a[br]);
        swap_cols(t, bc);
        continue;
      }
      // row and column are clear; enforce divisibility of the trailing block
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] = add(a[t][c], a[bad_row][c]);
    }
    diagonal.push_back(magnitude(a[t][t]));
  }
  return diagonal;
}

template <class T>
std::vector<Integer> to_integers(const std::vector<T>& xs) {
  std::vector<Integer> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

// Sparse elimination on unit pivots (Markowitz-style choice), then dense SNF.
template <class T>
std::vector<Integer> sparse_factors(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::size_t, T>>;
  std::vector<Row> rows(m.rows);
  // col_rows may hold stale or repeated row ids; col_count is exact.
  std::vector<std::vector<std::size_t>> col_rows(m.cols);
  std::vector<std::size_t> col_count(m.cols, 0);
  for (const auto& t : m.entries) {
    if (t.value == 0) continue;
    auto& row = rows[t.row];
    auto it = std::lower_bound(row.begin(), row.end(), t.col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == t.col) {
      it->second = add(it->second, T(t.value));
      if (it->second == 0) {
        row.erase(it);
        --col_count[t.col];
      }
    } else {
      row.insert(it, {t.col, T(t.value)});
      col_rows[t.col].push_back(t.row);
      ++col_count[t.col];
    }
  }

  auto entry = [&](std::size_t r, std::size_t c) -> T {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t cc) { return e.first < cc; });
    return it != row.end() && it->first == c ? it->second : T(0);
  };

  std::size_t units = 0;
  Row merged;
  std::vector<std::size_t> targets;
  while (true) {
    std::size_t pr = m.rows;
    std::size_t pc = m.cols;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < m.rows && best_cost > 0; ++r) {
      if (rows[r].empty()) continue;
      const std::size_t row_cost = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = row_cost * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
          if (cost == 0) break;
        }
      }
    }
    if (pr == m.rows) break;

    const T pivot = entry(pr, pc);
    targets.clear();
    for (std::size_t r : col_rows[pc]) {
      if (r != pr) targets.push_back(r);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t r : targets) {
      const T below = entry(r, pc);
      if (below == 0) continue;
      const T factor = pivot == 1 ? below : sub_mul(T(0), T(1), below);
      const Row& src = rows[pr];
      Row& dst = rows[r];
      merged.clear();
      auto a = dst.begin();
      auto b = src.begin();
      while (a != dst.end() || b != src.end()) {
        if (b == src.end() || (a != dst.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == dst.end() || b->first < a->first) {
          merged.emplace_back(b->first, sub_mul(T(0), factor, b->second));
          col_rows[b->first].push_back(r);
          ++col_count[b->first];
          ++b;
        } else {
          T v = sub_mul(a->second, factor, b->second);
          if (v != 0) {
            merged.emplace_back(a->first, v);
          } else {
            --col_count[a->first];
          }
          ++a;
          ++b;
        }
      }
      dst.swap(merged);
    }
    for (const auto& [c, v] : rows[pr]) --col_count[c];
    rows[pr].clear();
    col_rows[pc].clear();
    ++units;
  }

  // Dense remainder.
  std::vector<std::size_t> live_cols;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (col_count[c] > 0) live_cols.push_back(c);
  }
  std::vector<std::size_t> col_pos(m.cols, 0);
  for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
  DenseRows<T> dense;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<T> d(live_cols.size(), T(0));
    for (const auto& [c, v] : row) d[col_pos[c]] = v;
    dense.push_back(std::move(d));
  }
  std::vector<Integer> out(units, Integer(1));
  for (auto& x : to_integers(dense_snf(std::move(dense)))) out.push_back(std::move(x));
  return out;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
  DenseRows<Integer> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return dense_snf(std::move(rows));
}

std::vector<Integer> sparse_invariant_factors(const SparseMatrix& m) {
  try {
    return sparse_factors<std::int64_t>(m);
  } catch (const Overflow&) {
    return sparse_factors<Integer>(m);
  }
}

ColumnEchelon column_echelon(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ColumnEchelon out{m, IntegerMatrix::identity(cols), IntegerMatrix::identity(cols), 0};
  IntegerMatrix& a = out.reduced;
  IntegerMatrix& v = out.transform;
  IntegerMatrix& w = out.inverse;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, c1), a(r, c2));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, c1), v(r, c2));
    for (std::size_t c = 0; c < cols; ++c) std::swap(w(c1, c), w(c2, c));
  };
  // column c -= q * column p; the inverse gains row p += q * row c
  auto reduce_col = [&](std::size_t c, std::size_t p, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, c) -= q * a(r, p);
    for (std::size_t r = 0; r < cols; ++r) v(r, c) -= q * v(r, p);
    for (std::size_t k = 0; k < cols; ++k) w(p, k) += q * w(c, k);
  };

  std::size_t p = 0;
  for (std::size_t r = 0; r < rows && p < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = p; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        if (best == cols || abs(a(r, c)) < abs(a(r, best))) best = c;
      }
      if (best == cols) break;
      swap_cols(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        const Integer q = a(r, c) / a(r, p);
        reduce_col(c, p, q);
        if (a(r, c) != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  out.rank = p;
  return out;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  const ColumnEchelon ech = column_echelon(m);
  const std::size_t n = m.cols();
  IntegerMatrix out(n, n - ech.rank);
  for (std::size_t c = ech.rank; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) out(r, c - ech.rank) = ech.transform(r, c);
  }
  return out;
}

}  // namespace schrom
