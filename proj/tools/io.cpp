// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <system_error>

#include "wh/error.hpp"

namespace wh::io {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

const Json& member(const Json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

double as_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2) {
    const auto den = as_int(j[1], "rational denominator");
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(as_int(j[0], "rational numerator"), den);
  }
  throw ParseError("rational: expected an integer or [num, den]");
}

Json rational_json(const Rational& r) {
  if (r.den == 1) return r.num;
  return Json::array({r.num, r.den});
}

GroupElement exponent_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw ParseError("exp: expected an array of integers");
  if (j.size() != rank) {
    throw ParseError("exp: expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  }
  std::vector<std::int64_t> e;
  e.reserve(rank);
  for (const auto& x : j) e.push_back(as_int(x, "exp"));
  return GroupElement(std::move(e));
}

// Shared by coefficient and vector entry lists.
std::map<GroupElement, Complex> entries_from_json(const Json& list, std::size_t rank, const char* what) {
  if (!list.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::map<GroupElement, Complex> out;
  for (const auto& e : list) {
    require_keys(e, {"exp", "re", "im"}, what);
    GroupElement xi = exponent_from_json(member(e, "exp", what), rank);
    const double re = e.contains("re") ? as_number(e["re"], "re") : 0.0;
    const double im = e.contains("im") ? as_number(e["im"], "im") : 0.0;
    if (out.contains(xi)) throw ParseError(std::string(what) + ": duplicate exponent " + xi.to_string());
    out.emplace(std::move(xi), Complex(re, im));
  }
  return out;
}

Json entries_json(const std::map<GroupElement, Complex>& m) {
  Json list = Json::array();
  for (const auto& [xi, c] : m) list.push_back({{"exp", xi.exponents()}, {"re", c.real()}, {"im", c.imag()}});
  return list;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw PreconditionError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw PreconditionError("cannot rename onto " + path + ": " + ec.message());
  }
}

Json to_json(const OrderedGroup& g) {
  Json j{{"rank", g.rank()}};
  if (g.is_lex()) {
    j["order"] = "lex";
  } else {
    const auto& re = std::get<RealEmbeddingOrder>(g.backend());
    Json weights = Json::array();
    for (const auto& w : re.weights) weights.push_back(Json::array({rational_json(w.a), rational_json(w.b)}));
    j["order"] = {{"embedding", {{"d", re.d}, {"weights", weights}}}};
  }
  return j;
}

OrderedGroup group_from_json(const Json& j) {
  require_keys(j, {"rank", "order"}, "group");
  const auto rank = as_int(member(j, "rank", "group"), "rank");
  if (rank < 1 || rank > static_cast<std::int64_t>(kMaxRank)) {
    throw DimensionError("group rank must be between 1 and " + std::to_string(kMaxRank));
  }
  const Json& order = member(j, "order", "group");
  if (order.is_string()) {
    if (order.get<std::string>() != "lex") throw ParseError("group order: expected \"lex\" or an embedding");
    return OrderedGroup::lex(static_cast<std::size_t>(rank));
  }
  require_keys(order, {"embedding"}, "group order");
  const Json& emb = member(order, "embedding", "group order");
  require_keys(emb, {"d", "weights"}, "embedding");
  const auto d = as_int(member(emb, "d", "embedding"), "d");
  const Json& wl = member(emb, "weights", "embedding");
  if (!wl.is_array()) throw ParseError("embedding weights: expected an array");
  std::vector<QuadraticWeight> weights;
  for (const auto& w : wl) {
    if (!w.is_array() || w.size() != 2) throw ParseError("embedding weight: expected [a, b]");
    weights.push_back({rational_from_json(w[0]), rational_from_json(w[1])});
  }
  if (weights.size() != static_cast<std::size_t>(rank)) {
    throw DimensionError("embedding has " + std::to_string(weights.size()) + " weights for rank " +
                         std::to_string(rank));
  }
  return OrderedGroup::real_embedding(d, std::move(weights));
}

Json to_json(const TrigPolynomial& p) {
  return {{"group", to_json(p.group())}, {"coeffs", entries_json(p.coeffs())}};
}

TrigPolynomial symbol_from_json(const Json& j, const std::optional<OrderedGroup>& group) {
  require_keys(j, {"group", "coeffs"}, "symbol");
  OrderedGroup g = group ? *group : group_from_json(member(j, "group", "symbol"));
  auto coeffs = entries_from_json(member(j, "coeffs", "symbol"), g.rank(), "coeffs");
  return TrigPolynomial(std::move(g), std::move(coeffs));
}

Json to_json(const PositiveVector& v) { return {{"entries", entries_json(v.entries())}}; }

PositiveVector vector_from_json(const Json& j, const OrderedGroup& group) {
  require_keys(j, {"entries"}, "vector");
  return PositiveVector(group, entries_from_json(member(j, "entries", "vector"), group.rank(), "entries"));
}

Json to_json(const FredholmVerdict& v) {
  if (const auto* f = std::get_if<Fredholm>(&v)) {
    return {{"status", "Fredholm"}, {"index", f->index}, {"winding", f->winding.exponents()}};
  }
  if (const auto* z = std::get_if<SymbolVanishes>(&v)) {
    return {{"status", "NotFredholm"},
            {"reason", "SymbolVanishes"},
            {"witness", z->witness.angles},
            {"grid_min", z->grid_min}};
  }
  return {{"status", "NotFredholm"},
          {"reason", "InfiniteCharacterIndex"},
          {"winding", std::get<InfiniteCharacterIndex>(v).winding.exponents()}};
}

Json to_json(const LambdaClass& c) {
  Json j{{"label", to_string(c.label)}, {"range_distance", c.range_distance}};
  if (c.label == CellLabel::FredholmHole) j["index"] = c.index;
  if (c.boundary_ambiguous) j["warning"] = "boundary-ambiguous: within twice the range tolerance";
  return j;
}

Json to_json(const SpectrumGrid& g) {
  std::vector<int> labels;
  labels.reserve(g.size());
  for (const auto l : g.labels()) labels.push_back(static_cast<int>(l));
  Json holes = Json::array();
  for (const auto& h : g.holes()) {
    Json e{{"component", h.component},
           {"index", h.index},
           {"label", to_string(h.label)},
           {"lambda", complex_json(h.lambda)}};
    if (h.ambiguous) e["ambiguous"] = true;
    holes.push_back(std::move(e));
  }
  const Box& b = g.box();
  return {{"box", {b.re0, b.re1, b.im0, b.im1}},
          {"nx", g.nx()},
          {"ny", g.ny()},
          {"labels", labels},
          {"legend", {"Range", "EssentialHole", "FredholmHole", "Resolvent", "Unbounded"}},
          {"hole_indices", holes},
          {"range_tolerance", g.range_tolerance()},
          {"dual_step", g.dual_step()}};
}

Json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

Json to_json(const z::FactorizationResult& f) {
  Json roots = Json::array();
  for (const auto& r : f.roots) roots.push_back({{"re", r.z.real()}, {"im", r.z.imag()}, {"class", z::to_string(r.cls)}});
  Json plus = Json::array();
  for (const auto& c : f.plus_factor) plus.push_back(complex_json(c));
  Json minus = Json::array();
  for (const auto& c : f.minus_factor) minus.push_back(complex_json(c));
  return {{"w", f.w}, {"constant", complex_json(f.constant)}, {"plus_factor", plus}, {"minus_factor", minus},
          {"roots", roots}};
}

Json to_json(const z::KernelData& k) {
  Json basis = Json::array();
  for (const auto& v : k.kernel_basis) {
    Json entries = Json::array();
    for (const auto& [xi, c] : v.entries()) entries.push_back({{"index", xi[0]}, {"re", c.real()}, {"im", c.imag()}});
    basis.push_back(std::move(entries));
  }
  return {{"dim_ker", k.dim_ker}, {"dim_coker", k.dim_coker}, {"kernel", basis}};
}

}  // namespace wh::io
