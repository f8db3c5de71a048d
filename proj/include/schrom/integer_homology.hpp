#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schrom/integer_matrix.hpp"
#include "schrom/polynomial.hpp"
#include "schrom/signed_graph.hpp"
#include "schrom/state_complex.hpp"

namespace schrom {

/// Finitely generated abelian group Z^free_rank + Z_t1 + ... + Z_tk with
/// t1 | t2 | ... | tk and every ti >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Canonical group for a direct sum of cyclic groups Z_n. An order of 0
  /// stands for Z, an order of 1 for the trivial group.
  static AbelianGroup from_cyclic(std::vector<Integer> orders);
  static AbelianGroup free(std::size_t rank) { return AbelianGroup{rank, {}}; }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z_2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);

/// Z-graded abelian group; only nontrivial parts are stored.
class GradedAbelianGroup {
 public:
  const std::map<int, AbelianGroup>& parts() const { return parts_; }
  AbelianGroup at(int j) const;
  void set(int j, AbelianGroup group);
  /// Adds group into degree j as a direct summand.
  void add(int j, const AbelianGroup& group);
  bool is_trivial() const { return parts_.empty(); }

  /// Sum of q^j * free_rank(j); torsion is invisible. Requires j >= 0 throughout.
  IntPolynomial qdim() const;
  /// Every degree raised by shift.
  GradedAbelianGroup shifted(int shift) const;
  /// "Z_2{2} + Z{1}", with a bare "Z" for degree 0 summands; "0" when trivial.
  std::string to_string() const;

  friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;

 private:
  std::map<int, AbelianGroup> parts_;
};

/// H^{i,j} for all bidegrees; only nontrivial groups are stored.
class GradedCohomology {
 public:
  const std::map<int, GradedAbelianGroup>& degrees() const { return degrees_; }
  GradedAbelianGroup degree(int i) const;
  AbelianGroup at(int i, int j) const;
  void set(int i, int j, AbelianGroup group);
  void add(int i, int j, const AbelianGroup& group);
  bool is_trivial() const { return degrees_.empty(); }

  IntPolynomial qdim(int i) const;
  /// Sum over i of (-1)^i qdim H^i.
  IntPolynomial euler() const;
  /// Internal degree j raised by shift in every cohomological degree.
  GradedCohomology shifted(int shift) const;

  struct Entry {
    int i = 0;
    int j = 0;
    AbelianGroup group;
  };
  /// Nontrivial groups sorted by (i, j).
  std::vector<Entry> entries() const;

  friend bool operator==(const GradedCohomology&, const GradedCohomology&) = default;

 private:
  std::map<int, GradedAbelianGroup> degrees_;
};

/// Raised when consecutive differentials do not compose to zero.
class ComplexIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// ker(d_out) / im(d_in) for C^{i-1} --d_in--> C^i --d_out--> C^{i+1}.
/// d_out has dim C^i columns and d_in has dim C^i rows.
AbelianGroup homology_group(const IntegerMatrix& d_out, const IntegerMatrix& d_in);

/// Cohomology of every bidegree, via the ranks and invariant factors of the
/// sparse differentials.
GradedCohomology graded_cohomology(const StateComplex& complex);
GradedCohomology graded_cohomology(const SignedGraph& g, Variant v);

/// Sum over i of (-1)^i qdim C^i.
IntPolynomial chain_euler(const StateComplex& complex);

}  // namespace schrom
