// Text encodings used on the command line and in input files.
#pragma once

#include "prodseq/coverlemma.hpp"
#include "prodseq/polyseq.hpp"
#include "prodseq/sequences.hpp"

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace prodseq::parse {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline Integer integer(std::string_view text) {
  const std::string s(trim(text));
  const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw DomainError("not an integer: '" + s + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

/// "p" or "p/q" with q > 0.
inline Rational rational(std::string_view text) {
  const auto parts = split(text, '/');
  if (parts.size() == 1) return Rational(integer(parts[0]));
  if (parts.size() != 2) throw DomainError("not a rational: '" + std::string(text) + "'");
  const Integer den = integer(parts[1]);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(integer(parts[0]), den);
}

inline bool has_fraction(std::string_view text) { return text.find('/') != std::string_view::npos; }

inline std::vector<Natural> natural_list(std::string_view text) {
  std::vector<Natural> out;
  for (const auto& item : split(text, ',')) out.push_back(integer(item));
  return out;
}

inline std::vector<Rational> rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(rational(item));
  return out;
}

/// Comma-separated coefficients, constant term first: "1,0,1" is 1 + x^2.
inline PolynomialZ polynomial(std::string_view text) {
  std::vector<Integer> c;
  for (const auto& item : split(text, ',')) c.push_back(integer(item));
  return PolynomialZ(std::move(c));
}

/// Factors separated by ';', each "coefficients[^multiplicity]".
inline std::vector<PolyFactor> poly_factors(std::string_view text) {
  std::vector<PolyFactor> out;
  for (const auto& item : split(text, ';')) {
    const auto caret = item.find('^');
    PolyFactor f{polynomial(std::string_view(item).substr(0, caret)), 1};
    if (caret != std::string::npos) {
      const Integer m = integer(std::string_view(item).substr(caret + 1));
      if (m < 1 || m > 64) throw DomainError("multiplicity out of range in '" + item + "'");
      f.multiplicity = static_cast<unsigned>(m);
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// "fib", "lucasV", "lucasU:P,Q" or "lucasV:P,Q".
inline SequenceId sequence(std::string_view text) {
  const std::string s(trim(text));
  if (s == "fib") return SequenceId::fibonacci();
  if (s == "lucasV") return SequenceId::lucas_numbers();
  for (const auto& [prefix, kind] : {std::pair{"lucasU:", SequenceKind::kU}, std::pair{"lucasV:", SequenceKind::kV}}) {
    if (s.rfind(prefix, 0) == 0) {
      const auto pq = split(std::string_view(s).substr(std::string_view(prefix).size()), ',');
      if (pq.size() != 2) throw DomainError("expected P,Q in '" + s + "'");
      SequenceId id{{integer(pq[0]), integer(pq[1])}, kind};
      id.spec.validate();
      return id;
    }
  }
  throw DomainError("unknown sequence '" + s + "' (fib, lucasV, lucasU:P,Q, lucasV:P,Q)");
}

struct LabeledBipartite {
  Bipartite graph;
  std::vector<std::string> a_labels;
  std::vector<std::string> b_labels;  // in order of first appearance
};

/// One edge "a,b" per line; blank lines and lines starting with '#' are skipped.
inline LabeledBipartite bipartite_edges(std::istream& in) {
  std::map<std::string, std::size_t> a_ids, b_ids;
  std::vector<std::string> a_labels, b_labels;
  std::vector<std::vector<std::size_t>> adj;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto parts = split(t, ',');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw DomainError("line " + std::to_string(line_no) + ": expected 'a,b'");
    }
    const auto [ai, a_new] = a_ids.try_emplace(parts[0], a_labels.size());
    if (a_new) a_labels.push_back(parts[0]);
    const auto [bi, b_new] = b_ids.try_emplace(parts[1], b_labels.size());
    if (b_new) {
      b_labels.push_back(parts[1]);
      adj.emplace_back();
    }
    adj[bi->second].push_back(ai->second);
  }
  return {Bipartite(a_labels.size(), std::move(adj)), std::move(a_labels), std::move(b_labels)};
}

}  // namespace prodseq::parse
