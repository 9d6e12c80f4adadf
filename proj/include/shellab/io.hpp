// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
// Complex file:
//   # comment
//   n 6
//   1 2 3
//   2 3 4
//
// Poset cover list (the header is optional; without it the largest label
// fixes the element count):
//   n 4
//   1 < 3
//   2 < 3

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shellab/complex.hpp"
#include "shellab/h_assignment.hpp"
#include "shellab/poset.hpp"
#include "shellab/search.hpp"
#include "shellab/shelling.hpp"

namespace shellab {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

inline int parse_int(std::string_view tok, std::size_t line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

/// Calls fn(line_number, content) for each non-blank, non-comment line.
template <class Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const auto s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    fn(no, s);
  }
}

/// "n <count>" or nullopt.
inline std::optional<int> parse_header(std::string_view s, std::size_t line) {
  const auto tok = split_ws(s);
  if (tok.empty() || tok[0] != "n") return std::nullopt;
  if (tok.size() != 2) throw ParseError(line, "header must be 'n <count>'");
  const int n = parse_int(tok[1], line);
  if (n < 1) throw ParseError(line, "vertex count must be positive");
  return n;
}

}  // namespace detail

/// Vertex sets as written, in file order, before inclusion reduction.
struct RawComplex {
  int n = 0;
  std::vector<std::vector<int>> sets;
  std::vector<std::size_t> lines;
};

inline RawComplex read_raw_complex(std::istream& in) {
  RawComplex raw;
  bool header = false;
  detail::for_each_data_line(in, [&](std::size_t no, std::string_view s) {
    if (!header) {
      const auto n = detail::parse_header(s, no);
      if (!n) throw ParseError(no, "expected header 'n <count>'");
      raw.n = *n;
      header = true;
      return;
    }
    std::vector<int> set;
    for (auto tok : detail::split_ws(s)) {
      const int v = detail::parse_int(tok, no);
      if (v < 1 || v > raw.n)
        throw ParseError(no, "vertex " + std::to_string(v) + " outside 1.." +
                                 std::to_string(raw.n));
      if (!set.empty() && v <= set.back())
        throw ParseError(no, "vertices must be strictly ascending");
      set.push_back(v);
    }
    raw.sets.push_back(std::move(set));
    raw.lines.push_back(no);
  });
  if (!header) throw ParseError(0, "missing header 'n <count>'");
  if (raw.sets.empty()) throw ParseError(0, "no facets");
  return raw;
}

template <std::size_t W>
struct ParsedComplex {
  BasicComplex<W> complex;
  /// Canonical indices of the surviving sets in file order (first occurrence).
  FacetOrder listed;
  std::vector<BasicFace<W>> dropped;
};

/// Parses a complex file. Dropped non-maximal sets are reported to `diag`.
template <std::size_t W>
ParsedComplex<W> parse_complex(std::istream& in, std::ostream* diag = nullptr) {
  const auto raw = read_raw_complex(in);
  BasicFace<W>::check_vertex_count(raw.n);
  std::vector<BasicFace<W>> sets;
  for (const auto& s : raw.sets) sets.push_back(BasicFace<W>::from_range(s));
  auto red = reduce_facets(sets, raw.n);
  std::vector<std::size_t> listed;
  std::vector<bool> seen(red.complex.size(), false);
  for (const auto& s : sets)
    if (auto i = red.complex.index_of(s); i && !seen[*i]) {
      seen[*i] = true;
      listed.push_back(*i);
    }
  if (diag)
    for (const auto& d : red.dropped)
      *diag << "dropped non-maximal set " << d.to_string() << "\n";
  return {std::move(red.complex), FacetOrder(std::move(listed)), std::move(red.dropped)};
}

template <std::size_t W>
ParsedComplex<W> parse_complex(const std::string& text, std::ostream* diag = nullptr) {
  std::istringstream in(text);
  return parse_complex<W>(in, diag);
}

/// Canonical file text: header, then facets in canonical order.
template <std::size_t W>
std::string serialize(const BasicComplex<W>& c) {
  std::string s = "n " + std::to_string(c.n()) + "\n";
  for (const auto& f : c.facets()) {
    const auto v = f.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    s += "\n";
  }
  return s;
}

inline Poset parse_poset(std::istream& in) {
  std::optional<int> n;
  bool first = true;
  int largest = 0;
  std::vector<std::pair<int, int>> rel;
  detail::for_each_data_line(in, [&](std::size_t no, std::string_view s) {
    if (first) {
      first = false;
      if ((n = detail::parse_header(s, no))) return;
    }
    const auto tok = detail::split_ws(s);
    if (tok.size() != 3 || tok[1] != "<") throw ParseError(no, "expected 'a < b'");
    const int a = detail::parse_int(tok[0], no), b = detail::parse_int(tok[2], no);
    if (a < 1 || b < 1) throw ParseError(no, "elements must be positive");
    if (n && (a > *n || b > *n))
      throw ParseError(no, "element outside 1.." + std::to_string(*n));
    largest = std::max({largest, a, b});
    rel.emplace_back(a, b);
  });
  const int m = n.value_or(largest);
  if (m == 0) throw ParseError(0, "empty poset");
  return Poset::from_relations(m, rel);
}

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

/// Machine-readable answer to one question about one complex.
struct Certificate {
  std::string question;
  Answer answer = Answer::undecided;
  std::optional<FacetOrder> order;
  std::optional<HAssignment> h_assignment;
  std::uint64_t nodes = 0;
  double millis = 0;
};

template <std::size_t W>
nlohmann::json facets_json(const BasicComplex<W>& c) {
  auto arr = nlohmann::json::array();
  for (const auto& f : c.facets()) arr.push_back(f.vertices());
  return arr;
}

template <std::size_t W>
nlohmann::json to_json(const Certificate& cert, const BasicComplex<W>& c) {
  nlohmann::json j;
  j["question"] = cert.question;
  j["answer"] = std::string(to_string(cert.answer));
  j["n"] = c.n();
  j["facets"] = facets_json(c);
  if (cert.order) j["order"] = cert.order->indices();
  if (cert.h_assignment) j["h_assignment"] = cert.h_assignment->labels;
  j["stats"] = {{"nodes", cert.nodes}, {"millis", cert.millis}};
  return j;
}

}  // namespace shellab
