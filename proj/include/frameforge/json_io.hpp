#pragma once

// JSON (de)serialization of dyadics, sets and step functions, plus the
// report bundles used by the command-line tool.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "json.hpp"

#include "frameforge/scaling.hpp"

namespace frameforge {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Dyadic& d) { return json{{"num", d.num()}, {"exp", d.exp()}}; }

inline Dyadic dyadic_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Dyadic(j.get<std::int64_t>());
    return Dyadic(j.at("num").get<std::int64_t>(), j.at("exp").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad dyadic: ") + e.what());
  }
}

inline json to_json(const Interval& i) { return json{{"a", to_json(i.a)}, {"b", to_json(i.b)}}; }

inline Interval interval_from_json(const json& j) {
  try {
    Interval i{dyadic_from_json(j.at("a")), dyadic_from_json(j.at("b"))};
    if (!(i.a < i.b)) throw input_error("bad interval: a must be below b");
    return i;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad interval: ") + e.what());
  }
}

namespace detail {
inline json intervals_json(const std::vector<Interval>& v) {
  json a = json::array();
  for (const auto& i : v) a.push_back(to_json(i));
  return a;
}

inline std::vector<Interval> intervals_from(const json& j) {
  std::vector<Interval> v;
  if (!j.is_array()) throw input_error("intervals must be an array");
  for (const auto& x : j) v.push_back(interval_from_json(x));
  return v;
}
}  // namespace detail

inline json to_json(const LineSet& s) {
  return json{{"kind", "lset"}, {"window_exp", s.window_exp()}, {"intervals", detail::intervals_json(s.intervals())}};
}

inline json to_json(const PeriodicSet& s) { return json{{"kind", "pset"}, {"intervals", detail::intervals_json(s.intervals())}}; }

inline LineSet lineset_from_json(const json& j) {
  try {
    return LineSet(j.at("window_exp").get<int>(), detail::intervals_from(j.at("intervals")));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad line set: ") + e.what());
  }
}

inline PeriodicSet pset_from_json(const json& j) {
  try {
    for (const auto& i : detail::intervals_from(j.at("intervals")))
      if (i.a < Dyadic(0) || Dyadic(1) < i.b) throw input_error("periodic set intervals must lie in [0,1)");
    return PeriodicSet(detail::intervals_from(j.at("intervals")));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad periodic set: ") + e.what());
  }
}

namespace detail {
inline json piece_json(const Piece& q) {
  cplx v = q.v.value();
  json p{{"a", to_json(q.iv.a)}, {"b", to_json(q.iv.b)}, {"re", v.real()}, {"im", v.imag()}};
  if (q.v.sqrt2) {
    p["coef"] = json::array({q.v.c.real(), q.v.c.imag()});
    p["sqrt2"] = true;
  }
  return p;
}

inline Piece piece_from(const json& p) {
  try {
    Piece q{interval_from_json(p), Amp{}};
    if (p.contains("coef")) {
      const json& c = p.at("coef");
      q.v = Amp(cplx(c.at(0).get<double>(), c.at(1).get<double>()), p.value("sqrt2", false));
    } else {
      q.v = Amp(cplx(p.at("re").get<double>(), p.value("im", 0.0)));
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad piece: ") + e.what());
  }
}

inline json pieces_json(const Pieces& p) {
  json a = json::array();
  for (const auto& q : p) a.push_back(piece_json(q));
  return a;
}

inline Pieces pieces_from(const json& j) {
  if (!j.is_array()) throw input_error("pieces must be an array");
  Pieces p;
  for (const auto& x : j) p.push_back(piece_from(x));
  return p;
}
}  // namespace detail

inline json to_json(const StepFunction& f) {
  return json{{"kind", "step"},
              {"char_exp", to_json(f.char_exp())},
              {"window_exp", f.window_exp()},
              {"pieces", detail::pieces_json(f.pieces())}};
}

inline json to_json(const PeriodicStepFunction& f) {
  return json{{"kind", "pstep"}, {"char_exp", to_json(f.char_exp())}, {"pieces", detail::pieces_json(f.pieces())}};
}

inline StepFunction step_from_json(const json& j) {
  if (!j.is_object()) throw input_error("step function must be a JSON object");
  if (j.value("kind", "step") != "step") throw input_error("expected kind \"step\"");
  try {
    Dyadic c = j.contains("char_exp") ? dyadic_from_json(j.at("char_exp")) : Dyadic(0);
    return StepFunction(j.at("window_exp").get<int>(), detail::pieces_from(j.at("pieces")), c);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad step function: ") + e.what());
  } catch (const input_error&) {
    throw;
  } catch (const error& e) {
    throw input_error(e.what());
  }
}

inline PeriodicStepFunction pstep_from_json(const json& j) {
  if (!j.is_object()) throw input_error("periodic step function must be a JSON object");
  if (j.value("kind", "pstep") != "pstep") throw input_error("expected kind \"pstep\"");
  try {
    Dyadic c = j.contains("char_exp") ? dyadic_from_json(j.at("char_exp")) : Dyadic(0);
    Pieces p = detail::pieces_from(j.at("pieces"));
    for (const auto& q : p)
      if (q.iv.a < Dyadic(0) || Dyadic(1) < q.iv.b) throw input_error("periodic pieces must lie in [0,1)");
    return PeriodicStepFunction(std::move(p), c);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad periodic step function: ") + e.what());
  } catch (const input_error&) {
    throw;
  } catch (const error& e) {
    throw input_error(e.what());
  }
}

inline json to_json(const Witness& w) {
  return json{{"label", w.label}, {"xi", to_json(w.where.a)}, {"piece", to_json(w.where)}, {"expected", w.expected},
              {"got", w.got}};
}

inline json to_json(const Check& c) {
  json w = json::array();
  for (const auto& x : c.witnesses) w.push_back(to_json(x));
  json j{{"ok", c.ok}, {"max_defect", c.max_defect}, {"witnesses", w}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

/// 64-bit FNV-1a, hex.
inline std::string fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json scaling_bundle(const ScalingPair& p) {
  json j{{"ff-schema", kSchemaVersion}, {"kind", "scaling"}, {"phi", to_json(p.phi)}};
  j["m0"] = p.m0 ? to_json(*p.m0) : json(nullptr);
  j["C"] = to_json(p.C);
  j["S"] = to_json(p.S);
  j["S_tilde"] = to_json(p.S_tilde);
  j["verdicts"] = json{{"S1", p.s1.ok}, {"S2", p.s2.ok}, {"S3", p.s3.ok}, {"all", p.all()}};
  json w = json::array();
  for (const Check* c : {&p.s1, &p.s2, &p.s3})
    for (const auto& x : c->witnesses) w.push_back(to_json(x));
  j["witnesses"] = w;
  return j;
}

/// The function under `key` in a bundle (possibly wrapped in a report's "bundle"), or a bare function.
inline StepFunction step_in(const json& j, const char* key) {
  if (j.is_object() && j.contains("bundle")) return step_in(j.at("bundle"), key);
  if (j.is_object() && j.contains(key)) return step_from_json(j.at(key));
  return step_from_json(j);
}

inline PeriodicStepFunction pstep_in(const json& j, const char* key) {
  if (j.is_object() && j.contains("bundle")) return pstep_in(j.at("bundle"), key);
  if (j.is_object() && j.contains(key)) return pstep_from_json(j.at(key));
  return pstep_from_json(j);
}

inline PeriodicSet pset_in(const json& j) {
  if (j.is_object() && j.value("kind", "pset") == "pstep") return pstep_from_json(j).support();
  return pset_from_json(j);
}

}  // namespace frameforge
