// Machine-readable reports: JSON records and CSV tables. Field names and
// column orders here are the public format.
#pragma once

#include "prodseq/auxgraph.hpp"
#include "prodseq/extremal.hpp"
#include "prodseq/polyseq.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace prodseq {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json number_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline Json number_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return number_json(Integer(boost::multiprecision::numerator(v)));
  return v.str();
}

inline Json to_json(const ExtremalResult& r) {
  Json witness = Json::array();
  for (const auto& b : r.witness.elements()) witness.push_back(number_json(b));
  return Json{{"universe_max", r.universe_max},
              {"set_size", r.set_size},
              {"max_count", r.max_count},
              {"witness", witness}};
}

template <ExactNumber T>
Json to_json(const LucasCountReport<T>& r, const SequenceId& seq, std::size_t set_size) {
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(Json{{"value", number_json(m.value)}, {"index", m.index}});
  return Json{{"sequence", seq.name()},
              {"set_size", set_size},
              {"count", r.count},
              {"bound", r.bound},
              {"ok", r.ok},
              {"high_index_count", r.high_index_count},
              {"high_index_bound", r.high_index_bound},
              {"high_index_ok", r.high_index_ok},
              {"members", members}};
}

template <ExactNumber T>
Json to_json(const AuxGraph<T>& g) {
  const auto rep = edge_bound_report(g);
  Json cycle = nullptr;
  if (const auto c = find_cycle(g)) {
    cycle = Json::array();
    for (std::size_t v : *c) cycle.push_back(g.vertex_label(v));
  }
  return Json{{"mode", g.mode() == GraphMode::kOneClass ? "one" : "two"},
              {"vertices", rep.vertices},
              {"edges", rep.edges},
              {"self_loops", rep.self_loops},
              {"components", rep.components},
              {"acyclic", rep.acyclic},
              {"forest_bound_holds", rep.forest_bound_holds},
              {"cycle", cycle}};
}

inline Json to_json(const WitnessReport& w) {
  Json cover = Json::array();
  for (std::size_t j = 0; j < w.cover.size(); ++j) {
    const auto& t = w.terms[w.cover[j]];
    cover.push_back(Json{{"i", t.i}, {"value", number_json(t.value)}, {"fresh_prime", number_json(w.fresh_primes[j])}});
  }
  return Json{{"case", w.window_case},
              {"R", w.R},
              {"r", number_json(w.r)},
              {"k", w.k},
              {"B_lower_bound", number_json(w.b_lower_bound)},
              {"gamma", w.gamma},
              {"degree", w.degree},
              {"degree_bound", w.degree_bound},
              {"A_size", w.primes.size()},
              {"C_size", w.terms.size()},
              {"cover", cover}};
}

/// Header "i,value,largest_prime_factor,qualifies"; qualifies is 0 or 1.
inline void write_window_csv(std::ostream& os, const WindowStats& s) {
  os << "i,value,largest_prime_factor,qualifies\n";
  for (const auto& rec : s.records) {
    os << rec.i << ',' << rec.value.str() << ',' << rec.largest_prime_factor.str() << ','
       << (rec.qualifies ? 1 : 0) << '\n';
  }
}

/// Writes through a sibling temporary file and renames it into place.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace prodseq
