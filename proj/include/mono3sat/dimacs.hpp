#pragma once

#include "mono3sat/formula.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mono3sat::dimacs {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what);

  /// 1-based line number of the offending input.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct Document {
  CnfFormula formula;
  /// Comment bodies without the leading "c " marker, in file order.
  std::vector<std::string> comments;
  std::uint32_t declared_vars = 0;
  std::size_t declared_clauses = 0;
};

Document parse(std::istream &in);
Document parse(std::string_view text);
Document parse_file(const std::string &path);

/// Canonical DIMACS text: comments first, then the header and one clause per
/// line. parse(serialize(d)) reproduces d.formula exactly.
void serialize(const Document &doc, std::ostream &out);
std::string serialize(const Document &doc);

inline Document make_document(CnfFormula f, std::vector<std::string> comments = {}) {
  Document d{std::move(f), std::move(comments), 0, 0};
  d.declared_vars = d.formula.variable_count();
  d.declared_clauses = d.formula.size();
  return d;
}

} // namespace mono3sat::dimacs
