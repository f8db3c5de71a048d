#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schrom/signed_graph.hpp"

namespace schrom {

/// The lambda colours: -mu..mu for lambda = 2mu+1, and -mu..-1, 1..mu for
/// lambda = 2mu.
class ColorSet {
 public:
  explicit ColorSet(std::int64_t lambda);

  std::int64_t lambda() const { return lambda_; }
  const std::vector<std::int64_t>& colors() const { return colors_; }

 private:
  std::int64_t lambda_;
  std::vector<std::int64_t> colors_;
};

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

/// Maps k : V -> colours with k(tail) != sigma(e) k(head) on every edge.
/// Throws OracleBudgetError if lambda^|V| exceeds the budget.
std::uint64_t count_proper_colorings(const SignedGraph& g, std::int64_t lambda,
                                     std::uint64_t budget = kDefaultColoringBudget);

/// Maps k : V -> colours with k(tail) == sigma(e) k(head) on every edge.
std::uint64_t count_q_colorings(const SignedGraph& g, std::int64_t lambda,
                                std::uint64_t budget = kDefaultColoringBudget);

}  // namespace schrom
