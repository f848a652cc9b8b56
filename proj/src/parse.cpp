#include "gim/parse.hpp"

#include <sstream>
#include <vector>

namespace gim {

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  explicit Scanner(const std::string& t) : text(t) {}

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    const char c = text[pos];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
    return c;
  }
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_plain_inf(const std::string& s) { return s == "inf" || s == "+inf"; }

std::string trim(const std::string& t) {
  std::size_t b = 0, e = t.size();
  while (b < e && is_space(t[b])) ++b;
  while (e > b && is_space(t[e - 1])) --e;
  return t.substr(b, e - b);
}

GInterval parse_bracketed(Scanner& s) {
  const std::size_t cell_line = s.line, cell_col = s.col;
  const char open = s.take();
  std::string inner;
  while (!s.done() && s.peek() != ']' && s.peek() != ')' && s.peek() != '\n')
    inner.push_back(s.take());
  if (s.done() || s.peek() == '\n')
    throw ParseError("unterminated interval", cell_line, cell_col);
  const char close = s.take();

  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos ||
      inner.find(',', comma + 1) != std::string::npos)
    throw ParseError("interval needs exactly one comma", cell_line, cell_col);
  const std::string left = trim(inner.substr(0, comma));
  const std::string right = trim(inner.substr(comma + 1));

  try {
    if (open == '[' && close == ']')
      return GInterval::bounded(parse_rational(left), parse_rational(right));
    if (open == '[' && close == ')') {
      if (!is_plain_inf(right))
        throw ParseError("'[a,b)' form requires b = inf", cell_line, cell_col);
      return GInterval::left_bounded(parse_rational(left));
    }
    if (open == '(' && close == ']') {
      if (left != "-inf")
        throw ParseError("'(a,b]' form requires a = -inf", cell_line, cell_col);
      return GInterval::right_bounded(parse_rational(right));
    }
    // open == '(' && close == ')'
    if (left != "-inf" || !is_plain_inf(right))
      throw ParseError("'(a,b)' form requires (-inf,inf)", cell_line, cell_col);
    return GInterval::unbounded();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), cell_line, cell_col);
  }
}

}  // namespace

GIMatrix parse_matrix(const std::string& text) {
  Scanner s(text);
  std::vector<std::vector<GInterval>> rows;
  std::vector<GInterval> current;
  std::size_t row_line = 1, row_col = 1;

  auto end_row = [&]() {
    if (current.empty()) return;
    if (!rows.empty() && current.size() != rows.front().size())
      throw ParseError("ragged row: expected " +
                           std::to_string(rows.front().size()) +
                           " cells, got " + std::to_string(current.size()),
                       row_line, row_col);
    rows.push_back(std::move(current));
    current.clear();
  };

  while (!s.done()) {
    const char c = s.peek();
    if (is_space(c)) {
      s.take();
      continue;
    }
    if (c == '\n' || c == ';') {
      s.take();
      end_row();
      continue;
    }
    if (current.empty()) {
      row_line = s.line;
      row_col = s.col;
    }
    if (c == '[' || c == '(') {
      current.push_back(parse_bracketed(s));
    } else {
      const std::size_t cell_line = s.line, cell_col = s.col;
      std::string token;
      while (!s.done() && !is_space(s.peek()) && s.peek() != '\n' &&
             s.peek() != ';')
        token.push_back(s.take());
      try {
        current.push_back(GInterval::constant(parse_rational(token)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), cell_line, cell_col);
      }
    }
  }
  end_row();

  if (rows.empty()) throw ParseError("empty matrix", s.line, s.col);
  GIMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      out(i, j) = rows[i][j];
  return out;
}

std::string format_matrix(const GIMatrix& mu) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      if (j) out << ' ';
      out << mu(i, j).str();
    }
    if (i + 1 < mu.rows()) out << '\n';
  }
  return out.str();
}

std::string format_matrix(const RMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(a(i, j));
    }
    if (i + 1 < a.rows()) out << '\n';
  }
  return out.str();
}

}  // namespace gim
