#include "schrom/integer_homology.hpp"

#include <algorithm>
#include <utility>

#include <boost/integer/common_factor.hpp>

namespace schrom {

AbelianGroup AbelianGroup::from_cyclic(std::vector<Integer> orders) {
  AbelianGroup out;
  std::vector<Integer> finite;
  for (Integer& n : orders) {
    if (n < 0) n = -n;
    if (n == 0) {
      ++out.free_rank;
    } else if (n > 1) {
      finite.push_back(std::move(n));
    }
  }
  if (finite.size() <= 1) {
    out.torsion = std::move(finite);
    return out;
  }
  IntegerMatrix diagonal(finite.size(), finite.size());
  for (std::size_t k = 0; k < finite.size(); ++k) diagonal(k, k) = finite[k];
  for (Integer& d : smith_normal_form(diagonal)) {
    if (d > 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const Integer& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.str();
  }
  return out;
}

namespace {

std::vector<Integer> cyclic_orders(const AbelianGroup& g) {
  std::vector<Integer> out(g.free_rank, Integer(0));
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

}  // namespace

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders = cyclic_orders(a);
  const std::vector<Integer> rest = cyclic_orders(b);
  orders.insert(orders.end(), rest.begin(), rest.end());
  return AbelianGroup::from_cyclic(std::move(orders));
}

// Z_a (x) Z_b = Z_gcd(a,b) with Z = Z_0 and gcd(0, b) = b.
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders;
  for (const Integer& x : cyclic_orders(a)) {
    for (const Integer& y : cyclic_orders(b)) orders.push_back(boost::integer::gcd(x, y));
  }
  return AbelianGroup::from_cyclic(std::move(orders));
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders;
  for (const Integer& x : a.torsion) {
    for (const Integer& y : b.torsion) orders.push_back(boost::integer::gcd(x, y));
  }
  return AbelianGroup::from_cyclic(std::move(orders));
}

AbelianGroup GradedAbelianGroup::at(int j) const {
  const auto it = parts_.find(j);
  return it == parts_.end() ? AbelianGroup{} : it->second;
}

void GradedAbelianGroup::set(int j, AbelianGroup group) {
  if (group.is_trivial()) {
    parts_.erase(j);
  } else {
    parts_[j] = std::move(group);
  }
}

void GradedAbelianGroup::add(int j, const AbelianGroup& group) {
  if (!group.is_trivial()) set(j, direct_sum(at(j), group));
}

IntPolynomial GradedAbelianGroup::qdim() const {
  IntPolynomial out;
  for (const auto& [j, group] : parts_) {
    if (j < 0) throw InputError("qdim: negative internal degree " + std::to_string(j));
    out += IntPolynomial::monomial(static_cast<std::size_t>(j),
                                   static_cast<std::int64_t>(group.free_rank));
  }
  return out;
}

GradedAbelianGroup GradedAbelianGroup::shifted(int shift) const {
  GradedAbelianGroup out;
  for (const auto& [j, group] : parts_) out.parts_.emplace(j + shift, group);
  return out;
}

std::string GradedAbelianGroup::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  // highest degree first, the way the groups are usually written
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    const auto& [j, group] = *it;
    const std::string suffix = j == 0 ? "" : "{" + std::to_string(j) + "}";
    for (const Integer& t : group.torsion) {
      if (!out.empty()) out += " + ";
      out += "Z_" + t.str() + suffix;
    }
    for (std::size_t k = 0; k < group.free_rank; ++k) {
      if (!out.empty()) out += " + ";
      out += "Z" + suffix;
    }
  }
  return out;
}

GradedAbelianGroup GradedCohomology::degree(int i) const {
  const auto it = degrees_.find(i);
  return it == degrees_.end() ? GradedAbelianGroup{} : it->second;
}

AbelianGroup GradedCohomology::at(int i, int j) const {
  const auto it = degrees_.find(i);
  return it == degrees_.end() ? AbelianGroup{} : it->second.at(j);
}

void GradedCohomology::set(int i, int j, AbelianGroup group) {
  GradedAbelianGroup& d = degrees_[i];
  d.set(j, std::move(group));
  if (d.is_trivial()) degrees_.erase(i);
}

void GradedCohomology::add(int i, int j, const AbelianGroup& group) {
  if (!group.is_trivial()) set(i, j, direct_sum(at(i, j), group));
}

IntPolynomial GradedCohomology::qdim(int i) const { return degree(i).qdim(); }

IntPolynomial GradedCohomology::euler() const {
  IntPolynomial out;
  for (const auto& [i, group] : degrees_) {
    if (i % 2 == 0) {
      out += group.qdim();
    } else {
      out -= group.qdim();
    }
  }
  return out;
}

GradedCohomology GradedCohomology::shifted(int shift) const {
  GradedCohomology out;
  for (const auto& [i, group] : degrees_) out.degrees_.emplace(i, group.shifted(shift));
  return out;
}

std::vector<GradedCohomology::Entry> GradedCohomology::entries() const {
  std::vector<Entry> out;
  for (const auto& [i, graded] : degrees_) {
    for (const auto& [j, group] : graded.parts()) out.push_back({i, j, group});
  }
  return out;
}

AbelianGroup homology_group(const IntegerMatrix& d_out, const IntegerMatrix& d_in) {
  const std::size_t n = d_out.cols();
  if (d_in.rows() != n) {
    throw InputError("homology_group: d_out has " + std::to_string(n) + " columns but d_in has " +
                     std::to_string(d_in.rows()) + " rows");
  }
  if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero()) {
    throw ComplexIntegrityError("homology_group: d_out * d_in is not zero");
  }

  // Columns rank..n-1 of the transform span ker(d_out); the matching rows of
  // its inverse give coordinates with respect to that basis.
  const ColumnEchelon ech = column_echelon(d_out);
  const std::size_t kernel_dim = n - ech.rank;
  IntegerMatrix coords(kernel_dim, d_in.cols());
  for (std::size_t r = 0; r < kernel_dim; ++r) {
    for (std::size_t c = 0; c < d_in.cols(); ++c) {
      Integer acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += ech.inverse(ech.rank + r, k) * d_in(k, c);
      coords(r, c) = acc;
    }
  }

  const std::vector<Integer> factors = smith_normal_form(coords);
  AbelianGroup out;
  out.free_rank = kernel_dim - factors.size();
  for (const Integer& d : factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

GradedCohomology graded_cohomology(const StateComplex& complex) {
  const int max_i = complex.max_i();
  const int max_j = complex.max_j();
  GradedCohomology out;
  for (int j = 0; j <= max_j; ++j) {
    // factors[i] = invariant factors of d : C^{i,j} -> C^{i+1,j}
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(max_i) + 1);
    SparseMatrix previous;
    for (int i = 0; i <= max_i; ++i) {
      SparseMatrix d = complex.differential(i, j);
      if (i > 0 && !multiply(d, previous).is_zero()) {
        throw ComplexIntegrityError("d^2 != 0 at bidegree (" + std::to_string(i - 1) + "," +
                                    std::to_string(j) + ")");
      }
      factors[static_cast<std::size_t>(i)] = sparse_invariant_factors(d);
      previous = std::move(d);
    }
    for (int i = 0; i <= max_i; ++i) {
      const std::size_t dim = complex.rank(i, j);
      if (dim == 0) continue;
      const std::size_t rank_out = factors[static_cast<std::size_t>(i)].size();
      AbelianGroup group;
      std::size_t rank_in = 0;
      if (i > 0) {
        const auto& in = factors[static_cast<std::size_t>(i - 1)];
        rank_in = in.size();
        for (const Integer& d : in) {
          if (d > 1) group.torsion.push_back(d);
        }
      }
      group.free_rank = dim - rank_out - rank_in;
      out.set(i, j, std::move(group));
    }
  }
  return out;
}

GradedCohomology graded_cohomology(const SignedGraph& g, Variant v) {
  return graded_cohomology(StateComplex(g, v));
}

IntPolynomial chain_euler(const StateComplex& complex) {
  IntPolynomial out;
  for (int i = 0; i <= complex.max_i(); ++i) {
    for (int j = 0; j <= complex.max_j(); ++j) {
      const auto r = static_cast<std::int64_t>(complex.rank(i, j));
      if (r != 0) out += IntPolynomial::monomial(static_cast<std::size_t>(j), i % 2 == 0 ? r : -r);
    }
  }
  return out;
}

}  // namespace schrom
