#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "schrom/signed_graph.hpp"

namespace schrom {

/// Malformed graph file; line is 1-based, 0 when the problem is the file as a whole.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An edge endpoint is not below the declared vertex count.
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Graph file format:
///   # comment
///   vertices N
///   edge U V S      (S is + or -, one line per edge, file order = edge order)
SignedGraph parse_graph(std::string_view text);
std::string print_graph(const SignedGraph& g);

}  // namespace schrom
