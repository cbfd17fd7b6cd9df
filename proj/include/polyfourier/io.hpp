#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "geometry.hpp"

namespace polyfourier {

using Json = nlohmann::ordered_json;

namespace io {

// Accepts a JSON number or an exact rational string "p/q".
inline double parse_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return std::stod(s);
      double p = std::stod(s.substr(0, slash));
      double q = std::stod(s.substr(slash + 1));
      if (q == 0.0) throw DegenerateInput("rational with zero denominator: " + s);
      return p / q;
    } catch (const std::invalid_argument&) {
      throw DegenerateInput("bad numeric literal: " + s);
    }
  }
  throw DegenerateInput("expected a number or rational string");
}

inline Complex parse_complex(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw DegenerateInput("complex literal must be [re, im]");
    return Complex{parse_number(j[0]), parse_number(j[1])};
  }
  return Complex{parse_number(j), 0.0};
}

inline PolytopalRegion load_region(const Json& j) {
  if (!j.contains("dim") || !j.contains("parts"))
    throw DegenerateInput("region file needs 'dim' and 'parts'");
  const int d = j.at("dim").get<int>();
  std::vector<Polytope> parts;
  for (const Json& pj : j.at("parts")) {
    std::vector<RVector> verts;
    for (const Json& vj : pj.at("vertices")) {
      if (static_cast<int>(vj.size()) != d) throw DegenerateInput("vertex arity mismatch");
      RVector v(d);
      for (int k = 0; k < d; ++k) v[k] = parse_number(vj[k]);
      verts.push_back(std::move(v));
    }
    if (pj.contains("edges")) {
      std::vector<std::pair<int, int>> edges;
      for (const Json& ej : pj.at("edges"))
        edges.emplace_back(ej.at(0).get<int>(), ej.at(1).get<int>());
      parts.push_back(make_polytope(d, std::move(verts), std::move(edges)));
    } else {
      if (d > 3) throw DegenerateInput("edges are required when d > 3");
      parts.push_back(convex_hull(verts));
    }
  }
  return make_region(std::move(parts));
}

inline PolytopalRegion load_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DegenerateInput("cannot open region file " + path);
  Json j;
  in >> j;
  return load_region(j);
}

inline ComplexCircle load_circle(const Json& j) {
  if (!j.contains("center") || !j.contains("radius"))
    throw DegenerateInput("circle needs 'center' and 'radius'");
  const Json& cj = j.at("center");
  CVector center(cj.size());
  for (size_t k = 0; k < cj.size(); ++k) center[static_cast<int>(k)] = parse_complex(cj[k]);
  Complex radius = parse_complex(j.at("radius"));
  int a1 = 0, a2 = 1;
  if (j.contains("plane")) {
    a1 = j.at("plane").at(0).get<int>();
    a2 = j.at("plane").at(1).get<int>();
  }
  return make_circle(std::move(center), radius, a1, a2);
}

inline ComplexCircle load_circle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DegenerateInput("cannot open circle file " + path);
  Json j;
  in >> j;
  return load_circle(j);
}

inline ParametricCurve load_curve(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "trig_circle") return trig_circle_curve(load_circle(j));
  if (kind == "rational_circle") return rational_circle_curve(load_circle(j));
  if (kind == "builtin") return builtin_curve(j.at("name").get<std::string>());
  if (kind == "rational") {
    std::vector<RationalComponent> comps;
    for (const Json& cj : j.at("components")) {
      RationalComponent rc;
      for (const Json& c : cj.at("num")) rc.num.push_back(parse_complex(c));
      if (cj.contains("den"))
        for (const Json& c : cj.at("den")) rc.den.push_back(parse_complex(c));
      comps.push_back(std::move(rc));
    }
    double rho = j.contains("rho") ? parse_number(j.at("rho")) : 0.0;
    return rational_curve(std::move(comps), rho);
  }
  throw UnsupportedCurveKind("unknown curve kind: " + kind);
}

inline ParametricCurve load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DegenerateInput("cannot open curve file " + path);
  Json j;
  in >> j;
  return load_curve(j);
}

// "re,im;re,im;..." -> complex vector.
inline CVector parse_z_string(const std::string& s) {
  std::vector<Complex> comps;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    std::string tok = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    size_t comma = tok.find(',');
    try {
      if (comma == std::string::npos)
        comps.emplace_back(std::stod(tok), 0.0);
      else
        comps.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
    } catch (const std::exception&) {
      throw DegenerateInput("bad --z component: " + tok);
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  CVector z(static_cast<int>(comps.size()));
  for (size_t k = 0; k < comps.size(); ++k) z[static_cast<int>(k)] = comps[k];
  return z;
}

inline Json json_complex(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Json json_rvector(const RVector& v) {
  Json a = Json::array();
  for (int k = 0; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw DegenerateInput("cannot write " + path);
  for (size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_g17(row[k]);
    out << "\n";
  }
}

inline void write_report(const std::string& path, const Json& j) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw DegenerateInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace polyfourier
