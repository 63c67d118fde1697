// Copyright 2026 The gkn Authors.
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

#include "gkn/surface_io.h"

#include <fstream>
#include <regex>
#include <sstream>

namespace gkn {
namespace {

std::vector<Integer> IntegerListFromJson(const Json& value,
                                         std::string_view what) {
  if (!value.is_array()) {
    throw InputError(std::string(what) + " must be a JSON array");
  }
  std::vector<Integer> out;
  for (const Json& item : value) out.push_back(IntegerFromJson(item, what));
  return out;
}

Json IntegerListToJson(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(IntegerToJson(v));
  return out;
}

const Json& Require(const Json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end()) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Json ParseJsonText(const std::string& text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + std::string(what) + ": " +
                     e.what());
  }
}

bool FlagOr(const Json& flags, const char* key, bool fallback) {
  auto it = flags.find(key);
  if (it == flags.end()) return fallback;
  if (!it->is_boolean()) {
    throw InputError(std::string("flag \"") + key + "\" must be boolean");
  }
  return it->get<bool>();
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

}  // namespace

Json IntegerToJson(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer IntegerFromJson(const Json& value, std::string_view what) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Integer(std::to_string(value.get<uint64_t>()));
    }
    return Integer(std::to_string(value.get<int64_t>()));
  }
  if (value.is_string()) return ParseInteger(value.get<std::string>());
  throw InputError(std::string(what) + ": expected an integer, got " +
                   value.dump());
}

SurfaceModel SurfaceFromJson(const Json& spec) {
  if (!spec.is_object()) throw InputError("surface spec must be a JSON object");
  const Json& model = Require(spec, "model");
  if (!model.is_string()) throw InputError("\"model\" must be a string");
  const std::string name = model.get<std::string>();
  if (name == "projective_plane") return SurfaceModel::ProjectivePlane();
  if (name == "quadric") return SurfaceModel::SmoothQuadric();
  if (name == "complete_intersection") {
    return SurfaceModel::CompleteIntersection(
        IntegerFromJson(Require(spec, "ambient_dim"), "ambient_dim"),
        IntegerListFromJson(Require(spec, "degrees"), "degrees"));
  }
  if (name == "lattice") {
    const Json& gram_json = Require(spec, "gram");
    if (!gram_json.is_array()) throw InputError("\"gram\" must be an array");
    GramMatrix gram;
    for (const Json& row : gram_json) {
      gram.push_back(IntegerListFromJson(row, "gram row"));
    }
    DivisorClass h(IntegerListFromJson(Require(spec, "H"), "H"));
    DivisorClass k(IntegerListFromJson(Require(spec, "K"), "K"));
    // Unasserted hypotheses are treated as not holding.
    DeclaredFlags flags{false, false};
    if (auto it = spec.find("flags"); it != spec.end()) {
      if (!it->is_object()) throw InputError("\"flags\" must be an object");
      flags.h1_kH_vanishes = FlagOr(*it, "h1_kH_vanishes", false);
      flags.k_normal = FlagOr(*it, "k_normal", false);
    }
    std::optional<Integer> ambient;
    if (auto it = spec.find("ambient_dim"); it != spec.end()) {
      ambient = IntegerFromJson(*it, "ambient_dim");
    }
    return SurfaceModel::GeneralLattice(std::move(gram), std::move(h),
                                        std::move(k), flags,
                                        std::move(ambient));
  }
  throw InputError("unknown surface model \"" + name + "\"");
}

Json SurfaceToJson(const SurfaceModel& surface) {
  Json out;
  out["model"] = SurfaceKindName(surface.kind());
  switch (surface.kind()) {
    case SurfaceKind::kProjectivePlane:
    case SurfaceKind::kSmoothQuadric:
      break;
    case SurfaceKind::kCompleteIntersection:
      out["ambient_dim"] = IntegerToJson(*surface.ambient_dim());
      out["degrees"] = IntegerListToJson(surface.multidegrees());
      break;
    case SurfaceKind::kGeneralLattice: {
      Json gram = Json::array();
      for (const auto& row : surface.gram()) {
        gram.push_back(IntegerListToJson(row));
      }
      out["gram"] = gram;
      out["H"] = IntegerListToJson(surface.hyperplane().coords());
      out["K"] = IntegerListToJson(surface.canonical().coords());
      out["flags"] = {{"h1_kH_vanishes", surface.flags().h1_kH_vanishes},
                      {"k_normal", surface.flags().k_normal}};
      if (surface.ambient_dim()) {
        out["ambient_dim"] = IntegerToJson(*surface.ambient_dim());
      }
      break;
    }
  }
  return out;
}

std::optional<SurfaceModel> ParseBuiltinShorthand(std::string_view text) {
  if (text == "p2" || text == "P2") return SurfaceModel::ProjectivePlane();
  if (text == "quadric") return SurfaceModel::SmoothQuadric();
  if (text.substr(0, 3) != "ci:") return std::nullopt;

  std::optional<Integer> ambient;
  std::vector<Integer> degrees;
  bool in_degrees = false;
  for (const std::string& token : Split(text.substr(3), ',')) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (!in_degrees) {
        throw InputError("malformed complete intersection shorthand '" +
                         std::string(text) + "'");
      }
      degrees.push_back(ParseInteger(token));
      continue;
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "r") {
      ambient = ParseInteger(value);
      in_degrees = false;
    } else if (key == "deg") {
      for (const std::string& d : Split(value, 'x')) {
        degrees.push_back(ParseInteger(d));
      }
      in_degrees = true;
    } else {
      throw InputError("unknown key '" + key + "' in '" + std::string(text) +
                       "'");
    }
  }
  if (!ambient) {
    throw InputError("complete intersection shorthand needs r=<ambient dim>");
  }
  return SurfaceModel::CompleteIntersection(*ambient, std::move(degrees));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SurfaceModel ParseSurfaceArgument(const std::string& argument) {
  if (auto builtin = ParseBuiltinShorthand(argument)) return *builtin;
  if (!argument.empty() && argument.front() == '{') {
    return SurfaceFromJson(ParseJsonText(argument, "surface spec"));
  }
  std::ifstream probe(argument);
  if (!probe) {
    throw InputError("unknown surface '" + argument +
                     "' (not a builtin shorthand or readable file)");
  }
  return SurfaceFromJson(ParseJsonText(ReadFile(argument), argument));
}

DivisorClass ParseDivisor(std::string_view text, const SurfaceModel& surface) {
  static const std::regex kMultiple(R"(^\s*([+-]?)(\d*)\s*\*?\s*H\s*$)");
  std::string s(text);
  std::smatch match;
  if (std::regex_match(s, match, kMultiple)) {
    Integer n = match[2].str().empty() ? Integer(1) : ParseInteger(match[2].str());
    if (match[1].str() == "-") n = -n;
    return surface.Multiple(n);
  }
  if (!s.empty() && s.front() == '{') {
    Json spec = ParseJsonText(s, "divisor");
    DivisorClass d(IntegerListFromJson(Require(spec, "coords"), "coords"));
    if (d.rank() != surface.rank()) {
      throw InputError("divisor dimension mismatch: divisor has " +
                       std::to_string(d.rank()) + " coordinates, lattice rank " +
                       std::to_string(surface.rank()));
    }
    return d;
  }
  throw InputError("cannot parse divisor '" + s +
                   "' (expected \"nH\" or {\"coords\":[...]})");
}

PointConditionScheme SchemeFromJson(const Json& spec) {
  if (!spec.is_object()) throw InputError("point list must be a JSON object");
  PointConditionScheme scheme;
  scheme.degree =
      static_cast<int>(ToInt64(IntegerFromJson(Require(spec, "degree"), "degree"),
                               "degree"));
  const Json& points = Require(spec, "points");
  if (!points.is_array()) throw InputError("\"points\" must be an array");
  for (const Json& p : points) {
    const Json& xyz = Require(p, "xyz");
    if (!xyz.is_array() || xyz.size() != 3) {
      throw InputError("\"xyz\" must hold three coordinates");
    }
    std::array<Rational, 3> c;
    for (int i = 0; i < 3; ++i) {
      const Json& v = xyz[i];
      if (v.is_string()) {
        c[i] = ParseRational(v.get<std::string>());
      } else {
        c[i] = Rational(IntegerFromJson(v, "coordinate"));
      }
    }
    int mult = 1;
    if (auto it = p.find("mult"); it != p.end()) {
      mult = static_cast<int>(ToInt64(IntegerFromJson(*it, "mult"), "mult"));
    }
    if (mult < 1) throw InputError("mult must be >= 1");
    scheme.points.push_back({PlanePoint(c[0], c[1], c[2]), mult});
  }
  return scheme;
}

Json SchemeToJson(const PointConditionScheme& scheme) {
  Json points = Json::array();
  for (const PointCondition& p : scheme.points) {
    Json xyz = Json::array();
    for (const Rational& c : p.point.coords()) xyz.push_back(ToString(c));
    points.push_back({{"xyz", xyz}, {"mult", p.multiplicity}});
  }
  return {{"degree", scheme.degree}, {"points", points}};
}

}  // namespace gkn
