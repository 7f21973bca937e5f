#include "mono3sat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace mono3sat::dimacs {

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i]))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]))
      ++j;
    if (j > i)
      tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Int> bool to_int(std::string_view tok, Int &value) {
  const char *first = tok.data();
  const char *last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  return line;
}

} // namespace

Document parse(std::istream &in) {
  Document doc;
  bool have_header = false;
  std::vector<Clause> clauses;
  std::vector<int> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;
  std::string raw;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(std::move(raw));
    const auto tokens = split_tokens(line);
    if (tokens.empty())
      continue;

    if (tokens.front().front() == 'c') {
      // Body follows the 'c' marker; one separating space is dropped.
      std::string body = line.substr(line.find('c') + 1);
      if (!body.empty() && body.front() == ' ')
        body.erase(0, 1);
      doc.comments.push_back(std::move(body));
      continue;
    }
    if (tokens.front() == "%")
      break;

    if (tokens.front() == "p") {
      if (have_header)
        throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      std::uint32_t vars = 0;
      std::size_t count = 0;
      if (!to_int(tokens[2], vars) || !to_int(tokens[3], count) ||
          vars > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw ParseError(line_no, "malformed header counts");
      doc.declared_vars = vars;
      doc.declared_clauses = count;
      have_header = true;
      continue;
    }

    if (!have_header)
      throw ParseError(line_no, "clause data before 'p cnf' header");

    for (auto tok : tokens) {
      int lit = 0;
      if (!to_int(tok, lit))
        throw ParseError(line_no, "invalid literal '" + std::string(tok) + "'");
      if (pending.empty())
        pending_line = line_no;
      if (lit == 0) {
        if (pending.empty())
          throw ParseError(line_no, "empty clause");
        try {
          clauses.push_back(Clause::of(pending));
        } catch (const FormulaError &e) {
          throw ParseError(pending_line, e.what());
        }
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::uint32_t>(lit < 0 ? -static_cast<long long>(lit) : lit);
      if (var > doc.declared_vars)
        throw ParseError(line_no, "variable " + std::to_string(var) +
                                      " exceeds declared variable count " +
                                      std::to_string(doc.declared_vars));
      pending.push_back(lit);
    }
  }

  if (!have_header)
    throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!pending.empty())
    throw ParseError(pending_line, "clause not terminated by 0");
  if (clauses.size() != doc.declared_clauses)
    throw ParseError(line_no, "header declares " + std::to_string(doc.declared_clauses) +
                                  " clauses but " + std::to_string(clauses.size()) +
                                  " were found");

  doc.formula = CnfFormula(std::move(clauses), doc.declared_vars);
  return doc;
}

Document parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

Document parse_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return parse(in);
}

void serialize(const Document &doc, std::ostream &out) {
  for (const auto &c : doc.comments) {
    out << 'c';
    if (!c.empty())
      out << ' ' << c;
    out << '\n';
  }
  const auto &f = doc.formula;
  out << "p cnf " << f.variable_count() << ' ' << f.size() << '\n';
  for (const auto &clause : f.clauses()) {
    for (const auto &l : clause)
      out << l.to_int() << ' ';
    out << "0\n";
  }
}

std::string serialize(const Document &doc) {
  std::ostringstream out;
  serialize(doc, out);
  return out.str();
}

} // namespace mono3sat::dimacs
