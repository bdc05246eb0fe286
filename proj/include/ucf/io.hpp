#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ucf/core.hpp"

namespace ucf {

// Family text format:
//   n=<integer>
//   one set per nonblank line, ascending elements separated by single spaces,
//   `{}` for the empty set; lines starting with '#' are comments.

namespace detail {

inline std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

inline int parse_int_token(std::string_view tok, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty() || tok[0] == '+' || tok[0] == '-')
    parse_fail(line_no, "expected a base-10 integer, got '" + std::string(tok) + "'");
  return value;
}

inline SetWord parse_set_line(std::string_view line, int n, std::size_t line_no) {
  if (line == "{}") return SetWord();
  SetWord s;
  int prev = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t sp = line.find(' ', pos);
    std::string_view tok = line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
    int e = parse_int_token(tok, line_no);
    if (e < 1 || e > n) parse_fail(line_no, "element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    if (e <= prev) parse_fail(line_no, "elements must be strictly ascending");
    s |= SetWord::single(e);
    prev = e;
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return s;
}

}  // namespace detail

/// Parses one family document. Errors carry the offending line number.
inline Family parse_family(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  int n = 0;
  bool have_header = false;
  std::vector<SetWord> members;
  std::set<SetWord> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line.substr(0, 2) != "n=") detail::parse_fail(line_no, "expected header 'n=<integer>'");
      n = detail::parse_int_token(line.substr(2), line_no);
      if (n < 1 || n > kMaxGround) detail::parse_fail(line_no, "n must lie in [1, 64]");
      have_header = true;
      continue;
    }
    SetWord s = detail::parse_set_line(line, n, line_no);
    if (!seen.insert(s).second) detail::parse_fail(line_no, "duplicate set " + s.str());
    members.push_back(s);
  }
  if (!have_header) detail::parse_fail(line_no + 1, "missing header 'n=<integer>'");
  return Family(GroundSize(n), std::move(members));
}

inline Family parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

inline Family read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_family(in);
}

/// One set in text-format syntax ("1 2 3" or "{}").
inline std::string format_set_line(SetWord s) {
  if (s.empty()) return "{}";
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

/// Canonical text form: header then members in canonical order.
inline std::string emit_family(const Family& f) {
  std::string out = "n=" + std::to_string(f.n()) + "\n";
  for (SetWord s : f) out += format_set_line(s) + "\n";
  return out;
}

/// Splits a stream of concatenated documents, each starting at an `n=` line.
inline std::vector<Family> parse_family_stream(std::istream& in) {
  std::vector<Family> out;
  std::string raw, current;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back(parse_family(std::string_view(current)));
    current.clear();
  };
  while (std::getline(in, raw)) {
    if (raw.rfind("n=", 0) == 0) {
      flush();
      open = true;
    }
    current += raw;
    current += '\n';
  }
  flush();
  return out;
}

}  // namespace ucf
