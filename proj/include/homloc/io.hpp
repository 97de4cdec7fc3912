#pragma once

// SC1 and OFF readers.
//
// SC1: first line `sc1`, then one simplex per line as whitespace-separated
// vertex ids; lines starting with `#` are comments. Faces are implied.
// OFF: triangle meshes only; coordinates are read and discarded.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homloc/complex.hpp"

namespace homloc::io {

using RawComplex = std::vector<std::vector<std::uint64_t>>;

struct ParsedInput {
  RawComplex simplices;
  std::size_t min_vertices = 0;  // OFF declares vertices that may be isolated

  SimplicialComplex build() const { return build_complex(simplices, min_vertices); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw MalformedInput("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         std::string(tok) + "'");
  return v;
}

inline bool is_number(std::string_view tok) {
  double x = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Next non-empty, non-comment line.
inline bool next_line(std::istream& is, std::string& line, std::size_t& line_no) {
  while (std::getline(is, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    line = std::string(t);
    return true;
  }
  return false;
}

}  // namespace detail

inline ParsedInput parse_sc1(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_line(is, line, line_no) || line != "sc1") throw MalformedInput("SC1: missing 'sc1' header");
  ParsedInput out;
  while (detail::next_line(is, line, line_no)) {
    std::vector<std::uint64_t> s;
    for (auto tok : detail::tokens(line)) s.push_back(detail::parse_id(tok, line_no));
    if (s.empty()) continue;
    std::vector<std::uint64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedInput("line " + std::to_string(line_no) + ": duplicate vertex within a simplex");
    out.simplices.push_back(std::move(s));
  }
  return out;
}

inline ParsedInput parse_off(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_line(is, line, line_no)) throw MalformedInput("OFF: empty input");
  auto toks = detail::tokens(line);
  if (toks.empty() || toks.front() != "OFF") throw MalformedInput("OFF: missing 'OFF' header");
  toks.erase(toks.begin());
  if (toks.empty()) {
    if (!detail::next_line(is, line, line_no)) throw MalformedInput("OFF: missing counts");
    toks = detail::tokens(line);
  }
  if (toks.size() < 2) throw MalformedInput("OFF: counts line needs vertex and face counts");
  const std::uint64_t nv = detail::parse_id(toks[0], line_no);
  const std::uint64_t nf = detail::parse_id(toks[1], line_no);

  for (std::uint64_t i = 0; i < nv; ++i) {
    if (!detail::next_line(is, line, line_no)) throw MalformedInput("OFF: truncated vertex list");
    const auto coords = detail::tokens(line);
    if (coords.size() < 3 || !detail::is_number(coords[0]) || !detail::is_number(coords[1]) ||
        !detail::is_number(coords[2]))
      throw MalformedInput("line " + std::to_string(line_no) + ": expected vertex coordinates");
  }
  ParsedInput out;
  out.min_vertices = nv;
  for (std::uint64_t f = 0; f < nf; ++f) {
    if (!detail::next_line(is, line, line_no)) throw MalformedInput("OFF: truncated face list");
    const auto ft = detail::tokens(line);
    if (ft.empty() || detail::parse_id(ft[0], line_no) != 3 || ft.size() < 4)
      throw MalformedInput("line " + std::to_string(line_no) + ": only triangular faces are supported");
    std::vector<std::uint64_t> tri;
    for (std::size_t i = 1; i <= 3; ++i) {
      const std::uint64_t v = detail::parse_id(ft[i], line_no);
      if (v >= nv) throw MalformedInput("line " + std::to_string(line_no) + ": vertex index out of range");
      tri.push_back(v);
    }
    std::vector<std::uint64_t> sorted = tri;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedInput("line " + std::to_string(line_no) + ": degenerate face");
    out.simplices.push_back(std::move(tri));
  }
  return out;
}

// Dispatches on the first significant token: `sc1` or `OFF`.
inline ParsedInput parse_any(std::istream& is) {
  std::stringstream buf;
  buf << is.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_line(probe, line, line_no)) throw MalformedInput("empty input");
  std::istringstream again(text);
  const auto toks = detail::tokens(line);
  if (!toks.empty() && toks.front() == "OFF") return parse_off(again);
  return parse_sc1(again);
}

inline ParsedInput load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  return parse_any(in);
}

inline void write_sc1(std::ostream& os, const RawComplex& raw, std::string_view comment = {}) {
  os << "sc1\n";
  if (!comment.empty()) os << "# " << comment << '\n';
  for (const auto& s : raw) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << '\n';
  }
}

}  // namespace homloc::io
