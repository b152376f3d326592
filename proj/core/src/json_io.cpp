// Copyright 2026 The cbundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbundle/json_io.hpp"

#include <sstream>

#include "cbundle/errors.hpp"

namespace cbundle {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Rat& r) { return to_string(r); }

namespace {

std::string exponent_key(Mono m, size_t arity) {
  std::string s = "(";
  for (size_t i = 0; i < arity; ++i) {
    if (i) s += ",";
    s += std::to_string(mono::exp(m, i));
  }
  return s + ")";
}

std::vector<unsigned> parse_key(const std::string& key, size_t arity) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') throw InputError("bad exponent key " + key);
  std::vector<unsigned> e;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) e.push_back(static_cast<unsigned>(std::stoul(part)));
  if (e.size() != arity) throw InputError("exponent key " + key + " has the wrong length");
  return e;
}

}  // namespace

Json to_json(const MPoly& p) {
  Json j = Json::object();
  size_t arity = p.ring() ? p.ring()->arity() : 0;
  for (const auto& [m, c] : p.terms()) j[exponent_key(m, arity)] = to_string(c);
  return j;
}

MPoly poly_from_json(const Json& j, const Ring* ring) {
  if (j.is_string()) return MPoly::parse(ring, j.get<std::string>());
  if (!j.is_object()) throw InputError("polynomial must be a coefficient map or a string");
  MPoly p;
  for (const auto& [k, v] : j.items()) p += MPoly::monomial(ring, parse_key(k, ring->arity()), rat_from_json(v));
  return p;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const TernaryForm& q) {
  const RatMatrix& m = q.matrix();
  Json j;
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = i; k < 3; ++k) j["m" + std::to_string(i + 1) + std::to_string(k + 1)] = to_string(m(i, k));
  return j;
}

TernaryForm form_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("form must be an object with keys m11 .. m33");
  auto get = [&](const char* k) -> Rat {
    auto it = j.find(k);
    return it == j.end() ? Rat(0) : rat_from_json(*it);
  };
  for (const auto& [k, v] : j.items()) {
    static const char* keys[] = {"m11", "m12", "m13", "m22", "m23", "m33"};
    bool known = false;
    for (const char* kk : keys) known = known || k == kk;
    if (!known) throw InputError("unknown form key " + k);
  }
  return TernaryForm::from_upper(get("m11"), get("m12"), get("m13"), get("m22"), get("m23"), get("m33"));
}

Json to_json(const Signature& s) { return Json::array({s.plus, s.zero, s.minus}); }

Json to_json(const BrauerClass2& c) { return c.to_strings(); }

Json to_json(const IsolatingInterval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Json to_json(const SmoothnessCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["method"] = c.method;
  j["attempts"] = c.attempts;
  j["change"] = to_json(c.random_change);
  if (c.witness) {
    Json w;
    w["minpoly"] = to_json(c.witness->minpoly.to_mpoly(Ring::get({"s"}), 0));
    for (const auto& x : c.witness->coords) w["coords"].push_back(to_json(x.to_mpoly(Ring::get({"s"}), 0)));
    j["witness"] = w;
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["residual"] = c.residual;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

Json to_json(const FunctionSymbol& s) {
  Json arr = Json::array();
  for (const auto& [f, g] : s.terms) arr.push_back(Json::array({to_json(f), to_json(g)}));
  return arr;
}

Json to_json(const ComparisonResult& r, bool with_witnesses) {
  Json j;
  j["constant"] = r.constant;
  j["samples"] = r.witnesses.size();
  if (r.constant) j["difference"] = to_json(r.diff);
  if (r.refutation) {
    Json ref;
    for (size_t k : {r.refutation->first, r.refutation->second}) {
      Json w;
      for (const auto& x : r.witnesses[k]) w["point"].push_back(to_string(x));
      w["class"] = to_json(r.values[k]);
      ref.push_back(w);
    }
    j["refutation"] = ref;
  }
  if (with_witnesses) {
    Json ws = Json::array();
    for (size_t k = 0; k < r.witnesses.size(); ++k) {
      Json w;
      for (const auto& x : r.witnesses[k]) w["point"].push_back(to_string(x));
      w["class"] = to_json(r.values[k]);
      ws.push_back(w);
    }
    j["witnesses"] = ws;
  }
  return j;
}

Json to_json(const SignatureProfile& p) {
  Json j;
  j["roots"] = Json::array();
  for (const auto& r : p.weierstrass_roots) j["roots"].push_back(r.at_infinity ? Json("[1:0]") : to_json(r.iv));
  j["intervals"] = Json::array();
  for (const auto& iv : p.intervals) {
    Json k;
    k["sample"] = Json::array({to_string(iv.sample[0]), to_string(iv.sample[1])});
    k["signature"] = to_json(iv.sig);
    j["intervals"].push_back(k);
  }
  return j;
}

Json to_json(const RealCurveTopology& t) {
  Json j;
  j["configuration"] = to_string(t.configuration);
  j["ovals"] = t.oval_count;
  j["nesting"] = t.oval_parent;
  j["outside_cell"] = t.outside;
  j["chart"] = to_json(t.chart);
  j["chart_attempts"] = t.attempts;
  j["critical_values"] = Json::array();
  for (const auto& iv : t.critical) j["critical_values"].push_back(to_json(iv));
  j["cells"] = Json::array();
  for (const auto& c : t.cells) {
    Json k;
    for (const auto& x : c.sample) k["sample"].push_back(to_string(x));
    k["depth"] = c.depth;
    k["delta_sign"] = c.delta_sign;
    k["sectors"] = c.sectors.size();
    j["cells"].push_back(k);
  }
  return j;
}

Json to_json(const RegionReport& r) {
  Json j;
  j["image_cells"] = r.image_cells;
  j["oval_covered"] = Json::array();
  for (int c : r.oval_covered) j["oval_covered"].push_back(c < 0 ? Json("mixed") : Json(c == 1));
  int uncovered = 0, boundary = 0;
  for (const auto& a : r.arcs) {
    uncovered += !a.covered;
    boundary += a.boundary;
  }
  j["arc_pieces"] = r.arcs.size();
  j["uncovered_pieces"] = uncovered;
  j["boundary_pieces"] = boundary;
  j["outside_contained"] = r.outside_contained;
  j["boundary_law_holds"] = r.consistent;
  if (!r.problems.empty()) j["problems"] = r.problems;
  return j;
}

InstanceInput instance_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance document must be a JSON object");
  InstanceInput in;
  if (j.contains("name")) in.name = j.at("name").get<std::string>();
  for (const char* k : {"q1", "q2", "q3"})
    if (!j.contains(k)) throw InputError(std::string("instance is missing ") + k);
  in.q1 = form_from_json(j.at("q1"));
  in.q2 = form_from_json(j.at("q2"));
  in.q3 = form_from_json(j.at("q3"));
  if (j.contains("pgl2")) {
    const Json& g = j.at("pgl2");
    if (!g.is_array() || g.size() != 4) throw InputError("pgl2 must be [a, b, c, d]");
    std::vector<Rat> v;
    for (const auto& x : g) v.push_back(rat_from_json(x));
    if (v[0] * v[3] - v[1] * v[2] == 0) throw InputError("pgl2 substitution is singular");
    in.pgl2 = v;
  }
  if (j.contains("line")) {
    MPoly l = poly_from_json(j.at("line"), Ring::uvw());
    if (l.total_degree() != 1 || !l.is_homogeneous()) throw InputError("line must be a linear form in u, v, w");
    in.line = l;
  }
  return in;
}

Json to_json(const InstanceInput& in) {
  Json j;
  if (!in.name.empty()) j["name"] = in.name;
  j["q1"] = to_json(in.q1);
  j["q2"] = to_json(in.q2);
  j["q3"] = to_json(in.q3);
  if (in.pgl2) {
    Json g = Json::array();
    for (const auto& x : *in.pgl2) g.push_back(to_string(x));
    j["pgl2"] = g;
  }
  if (in.line) j["line"] = in.line->to_string();
  return j;
}

}  // namespace cbundle
