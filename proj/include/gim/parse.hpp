#ifndef GIM_PARSE_HPP
#define GIM_PARSE_HPP

#include <stdexcept>
#include <string>

#include "gim/matrix.hpp"

namespace gim {

/*
 * Textual matrix grammar:
 *
 *   matrix   :=  row ((newline | ';') row)*
 *   row      :=  cell (whitespace cell)*
 *   cell     :=  rational                 constant
 *              | '[' rational ',' rational ']'      bounded  [a,b], a <= b
 *              | '[' rational ',' inf ')'           left-bounded  [a,+inf)
 *              | '(' -inf ',' rational ']'          right-bounded (-inf,b]
 *              | '(' -inf ',' inf ')'               unbounded
 *   rational :=  ['+'|'-'] digits ['/' digits]
 *   inf      :=  ['+'] 'inf';   -inf := '-' 'inf'
 *
 * Blank lines are ignored. [a,a] collapses to the constant a.
 */

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Parse a matrix document. Throws ParseError (with 1-based line/column) on
/// ragged rows, malformed cells, or an empty interval.
GIMatrix parse_matrix(const std::string& text);

/// Canonical text form; parse_matrix(format_matrix(mu)) == mu.
std::string format_matrix(const GIMatrix& mu);
std::string format_matrix(const RMatrix& a);

}  // namespace gim

#endif  // GIM_PARSE_HPP
