#pragma once

#include <string>
#include <vector>

#include "hallcheck/catalog.hpp"

namespace hallcheck {

// Group file format (line oriented, 0-based points, '#' starts a comment):
//
//   group <label>
//   degree <n>
//   gen <cycles>        # zero or more; () is the identity
//
// Canonical form: cycles start at their smallest point, are ordered by first
// point, omit fixed points, and the file ends with a newline.

namespace detail {

struct LineScanner {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  // Next significant line (skips blanks and comments); returns false at EOF.
  bool next(std::string& out, int& line_no) {
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string raw = text.substr(pos, end - pos);
      int this_line = line;
      pos = end + (end < text.size() ? 1 : 0);
      ++line;
      size_t first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos || raw[first] == '#') continue;
      size_t last = raw.find_last_not_of(" \t\r");
      out = raw.substr(first, last - first + 1);
      line_no = this_line;
      return true;
    }
    return false;
  }
};

inline std::vector<std::vector<int>> parse_cycles(const std::string& s, int line,
                                                  int col_base) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  auto col = [&] { return col_base + static_cast<int>(pos); };
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw parse_error("expected '(' in cycle notation", line, col());
    ++pos;
    std::vector<int> cyc;
    while (true) {
      while (pos < s.size() && s[pos] == ' ') ++pos;
      if (pos >= s.size()) throw parse_error("unterminated cycle", line, col());
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start)
        throw parse_error("expected a point or ')' in cycle", line, col());
      cyc.push_back(std::stoi(s.substr(start, pos - start)));
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace detail

inline GroupSpec parse_group_file(const std::string& text) {
  detail::LineScanner scan{text};
  std::string line;
  int line_no = 0;

  if (!scan.next(line, line_no)) throw parse_error("empty group file", 1, 1);
  if (line.rfind("group ", 0) != 0 || line.size() <= 6)
    throw parse_error("expected 'group <label>'", line_no, 1);
  std::string label = line.substr(6);
  if (label.find(' ') != std::string::npos)
    throw parse_error("group label must not contain spaces", line_no, 7);

  if (!scan.next(line, line_no)) throw parse_error("missing 'degree' line", line_no + 1, 1);
  if (line.rfind("degree ", 0) != 0)
    throw parse_error("expected 'degree <n>'", line_no, 1);
  int degree = 0;
  try {
    size_t used = 0;
    degree = std::stoi(line.substr(7), &used);
    if (used != line.size() - 7) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw parse_error("degree must be an integer", line_no, 8);
  }
  if (degree < 1) throw parse_error("degree must be positive", line_no, 8);

  std::vector<Perm> gens;
  while (scan.next(line, line_no)) {
    if (line.rfind("gen ", 0) != 0)
      throw parse_error("expected 'gen <cycles>'", line_no, 1);
    auto cycles = detail::parse_cycles(line.substr(4), line_no, 5);
    try {
      gens.push_back(Perm::from_cycles(degree, cycles));
    } catch (const config_error& e) {
      throw parse_error(e.what(), line_no, 5);
    }
  }
  return raw_spec(std::move(label), degree, std::move(gens));
}

/// Canonical serialization; only raw specs carry explicit generators.
inline std::string serialize_group_file(const GroupSpec& spec) {
  if (spec.kind != GroupSpec::Kind::raw)
    throw config_error("only raw group specs serialize to the file format");
  std::string out = "group " + spec.label + "\n";
  out += "degree " + std::to_string(spec.raw_degree) + "\n";
  for (const auto& g : spec.raw_generators) out += "gen " + g.to_cycle_string() + "\n";
  return out;
}

// Sigma file format: one significant line, e.g.
//
//   sigma {2,3} {7} rest
//
// Classes are brace-delimited comma-separated primes; the optional trailing
// `rest` adds the implicit class of all remaining primes. Canonical form
// sorts classes by smallest member.

inline SigmaPartition parse_sigma_file(const std::string& text) {
  detail::LineScanner scan{text};
  std::string line;
  int line_no = 0;
  if (!scan.next(line, line_no)) throw parse_error("empty sigma file", 1, 1);
  std::string rest_check;
  int extra_line = 0;
  if (scan.next(rest_check, extra_line))
    throw parse_error("sigma file must contain a single definition line", extra_line, 1);

  if (line.rfind("sigma", 0) != 0) throw parse_error("expected 'sigma ...'", line_no, 1);
  size_t pos = 5;
  auto col = [&] { return static_cast<int>(pos) + 1; };
  std::vector<std::set<long>> classes;
  bool has_rest = false;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    if (has_rest) throw parse_error("'rest' must be the final token", line_no, col());
    if (line.compare(pos, 4, "rest") == 0 &&
        (pos + 4 == line.size() || line[pos + 4] == ' ')) {
      has_rest = true;
      pos += 4;
      continue;
    }
    if (line[pos] != '{')
      throw parse_error("expected '{' or 'rest'", line_no, col());
    ++pos;
    std::set<long> cls;
    while (true) {
      if (pos >= line.size()) throw parse_error("unterminated sigma class", line_no, col());
      if (line[pos] == '}') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == start) throw parse_error("expected a prime", line_no, col());
      cls.insert(std::stol(line.substr(start, pos - start)));
      if (pos < line.size() && line[pos] == ',') ++pos;
    }
    classes.push_back(std::move(cls));
  }
  // Semantic validation (primality, disjointness) happens in the constructor.
  return SigmaPartition(std::move(classes), has_rest);
}

inline std::string serialize_sigma_file(const SigmaPartition& sigma) {
  return "sigma " + sigma.canonical_text() + "\n";
}

}  // namespace hallcheck
