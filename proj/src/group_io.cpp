#include <sstream>

#include "error.hpp"
#include "group.hpp"

namespace cforge {

namespace {

// cycle notation on one line, e.g. "(0 1)(2 3)" or "()" for the identity
std::vector<uint32_t> parse_cycles(const std::string& line, uint32_t degree, int line_no) {
  std::vector<uint32_t> perm(degree);
  for (uint32_t i = 0; i < degree; ++i) perm[i] = i;
  size_t pos = 0;
  bool any = false;
  auto skip_ws = [&] {
    while (pos < line.size() && std::isspace(uint8_t(line[pos]))) ++pos;
  };
  skip_ws();
  while (pos < line.size()) {
    if (line[pos] != '(') throw ParseError("expected '(' in cycle notation", line_no);
    ++pos;
    std::vector<uint32_t> cycle;
    skip_ws();
    while (pos < line.size() && line[pos] != ')') {
      if (!std::isdigit(uint8_t(line[pos])))
        throw ParseError("expected point index in cycle", line_no);
      uint64_t v = 0;
      while (pos < line.size() && std::isdigit(uint8_t(line[pos])))
        v = v * 10 + uint64_t(line[pos++] - '0');
      if (v >= degree) throw ParseError("cycle point out of range", line_no);
      cycle.push_back(uint32_t(v));
      skip_ws();
    }
    if (pos == line.size()) throw ParseError("unterminated cycle", line_no);
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i)
      for (size_t j = i + 1; j < cycle.size(); ++j)
        if (cycle[i] == cycle[j]) throw ParseError("repeated point in cycle", line_no);
    if (cycle.size() >= 2)
      for (size_t i = 0; i < cycle.size(); ++i)
        perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation line", line_no);
  return perm;
}

}  // namespace

GroupPtr parse_group_text(const std::string& text, const std::string& name) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) throw ParseError("empty group text", 1);
  ++line_no;
  std::istringstream hs(line);
  std::string kw;
  hs >> kw;
  if (kw == "perm") {
    uint32_t degree = 0;
    if (!(hs >> degree) || degree == 0) throw ParseError("expected 'perm <degree>'", line_no);
    std::vector<std::vector<uint32_t>> gens;
    while (std::getline(is, line)) {
      ++line_no;
      bool blank = true;
      for (char ch : line)
        if (!std::isspace(uint8_t(ch))) blank = false;
      if (blank) continue;
      gens.push_back(parse_cycles(line, degree, line_no));
    }
    if (gens.empty()) throw ParseError("no generators given", line_no + 1);
    return group_from_permutations(degree, gens, name);
  }
  if (kw == "table") {
    uint32_t n = 0;
    if (!(hs >> n) || n == 0) throw ParseError("expected 'table <n>'", line_no);
    std::vector<std::vector<uint32_t>> table;
    for (uint32_t i = 0; i < n; ++i) {
      if (!std::getline(is, line)) throw ParseError("missing table row", line_no + 1);
      ++line_no;
      std::istringstream rs(line);
      std::vector<uint32_t> row;
      int64_t v;
      while (rs >> v) {
        if (v < 0 || v >= int64_t(n)) throw ParseError("table entry out of range", line_no);
        row.push_back(uint32_t(v));
      }
      if (row.size() != n) throw ParseError("table row has wrong length", line_no);
      table.push_back(std::move(row));
    }
    try {
      return group_from_table(table, name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1);
    }
  }
  throw ParseError("expected 'perm <degree>' or 'table <n>'", line_no);
}

std::string group_to_table_text(const GroupTable& g) {
  std::ostringstream os;
  os << "table " << g.order() << "\n";
  for (uint32_t i = 0; i < g.order(); ++i) {
    for (uint32_t j = 0; j < g.order(); ++j) {
      if (j) os << " ";
      os << g.mul(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cforge
