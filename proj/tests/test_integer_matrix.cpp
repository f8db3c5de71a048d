#include <doctest.h>

#include <functional>

#include <boost/integer/common_factor.hpp>

#include "schrom/integer_matrix.hpp"
#include "schrom/verifier.hpp"

using namespace schrom;

namespace {

Integer determinant(const IntegerMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Integer total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != k) sub_cols.push_back(cols[l]);
    }
    const Integer term = m(rows[0], cols[k]) * determinant(m, sub_rows, sub_cols);
    total += k % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t x = from; x < n; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
// d_k = D_k / D_{k-1}.
std::vector<Integer> minors_oracle(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = boost::integer::gcd(g, Integer(abs(determinant(m, rows, cols))));
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntegerMatrix random_matrix(CorpusRandom& rng, std::size_t rows, std::size_t cols, int spread) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<long long>(rng.below(2 * spread + 1)) - spread;
    }
  }
  return m;
}

SparseMatrix to_sparse(const IntegerMatrix& m) {
  SparseMatrix s{m.rows(), m.cols(), {}};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) s.entries.push_back({r, c, m(r, c).convert_to<std::int64_t>()});
    }
  }
  canonicalize(s);
  return s;
}

std::vector<Integer> ints(std::initializer_list<long long> xs) {
  std::vector<Integer> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix::identity(3)) == ints({1, 1, 1}));
  CHECK(smith_normal_form(IntegerMatrix(2, 2, {2, 0, 0, 0})) == ints({2}));
  CHECK(smith_normal_form(IntegerMatrix(2, 2, {0, 2, 3, 0})) == ints({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).empty());
  CHECK(smith_normal_form(IntegerMatrix(2, 2, {2, 4, 6, 8})) == ints({2, 4}));
}

TEST_CASE("smith normal form agrees with the minors oracle") {
  CorpusRandom rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng.below(4);
    const std::size_t cols = 1 + rng.below(4);
    IntegerMatrix m = random_matrix(rng, rows, cols, 3);
    if (trial % 3 == 0) {
      // force a rank deficit
      const std::size_t inner = 1 + rng.below(2);
      m = random_matrix(rng, rows, inner, 3) * random_matrix(rng, inner, cols, 3);
    }
    const std::vector<Integer> snf = smith_normal_form(m);
    CHECK(snf == minors_oracle(m));
    for (std::size_t k = 0; k + 1 < snf.size(); ++k) CHECK(snf[k + 1] % snf[k] == 0);
  }
}

TEST_CASE("sparse and dense invariant factors agree") {
  CorpusRandom rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng.below(9);
    const std::size_t cols = rng.below(9);
    IntegerMatrix m = random_matrix(rng, rows, cols, trial % 2 == 0 ? 1 : 4);
    CHECK(sparse_invariant_factors(to_sparse(m)) == smith_normal_form(m));
  }
}

TEST_CASE("sparse invariant factors survive 64-bit overflow") {
  // entries near 2^62 overflow int64 during elimination
  const long long big = 4'611'686'018'427'387'903LL;
  IntegerMatrix m(2, 2, {big, big - 1, big - 2, big - 5});
  CHECK(sparse_invariant_factors(to_sparse(m)) == smith_normal_form(m));
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(IntegerMatrix(2, 3)) == IntegerMatrix::identity(3));
  const IntegerMatrix k = kernel_basis(IntegerMatrix(1, 2, {1, 1}));
  REQUIRE(k.cols() == 1);
  CHECK(((k(0, 0) == 1 && k(1, 0) == -1) || (k(0, 0) == -1 && k(1, 0) == 1)));
  CHECK(kernel_basis(IntegerMatrix(2, 1, {1, 1})).cols() == 0);
}

TEST_CASE("kernel basis is complete and column echelon is unimodular") {
  CorpusRandom rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(4);
    const std::size_t cols = 1 + rng.below(5);
    const std::size_t inner = 1 + rng.below(3);
    const IntegerMatrix m = random_matrix(rng, rows, inner, 3) * random_matrix(rng, inner, cols, 3);
    const ColumnEchelon ech = column_echelon(m);
    CHECK(m * ech.transform == ech.reduced);
    CHECK(ech.transform * ech.inverse == IntegerMatrix::identity(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      CHECK((ech.reduced.column(c).is_zero() == (c >= ech.rank)));
    }
    const IntegerMatrix k = kernel_basis(m);
    CHECK(k.cols() == cols - smith_normal_form(m).size());
    CHECK((m * k).is_zero());
    // a saturated lattice: every invariant factor of the basis is 1
    for (const Integer& d : smith_normal_form(k)) CHECK(d == 1);
  }
}

TEST_CASE("sparse matrix helpers") {
  SparseMatrix m{2, 2, {{1, 1, 2}, {0, 0, 1}, {1, 1, -2}, {0, 1, 3}}};
  canonicalize(m);
  CHECK(m.entries == std::vector<Triplet>{{0, 0, 1}, {0, 1, 3}});
  const SparseMatrix a{1, 2, {{0, 0, 1}, {0, 1, 1}}};
  const SparseMatrix b{2, 1, {{0, 0, 1}, {1, 0, -1}}};
  CHECK(multiply(a, b).is_zero());
  CHECK_THROWS_AS(multiply(b, b), InputError);
}
