#pragma once

// Input parsing, report assembly and serialization for the command line
// tool.  All numbers cross the JSON boundary as decimal strings so nothing
// is ever rounded.

#include "latcirc/latcirc.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latcirc::report {

struct ParseError : std::runtime_error {
  int line;

  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int parse_int_token(const std::string& tok, int lineno) {
  std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) throw ParseError(lineno, "bad integer '" + tok + "'");
  for (std::size_t k = i; k < tok.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(tok[k])))
      throw ParseError(lineno, "bad integer '" + tok + "'");
  }
  Int v(tok.substr(i));
  return tok[0] == '-' ? -v : v;
}

// One point per line as "x y"; '#' starts a comment, blank lines are
// skipped, duplicate points are rejected with their line number.
inline std::vector<LatticePoint> parse_points(std::istream& in) {
  std::vector<LatticePoint> pts;
  std::set<LatticePoint> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::string sx, sy, extra;
    if (!(ls >> sx)) continue;
    if (!(ls >> sy)) throw ParseError(lineno, "expected two integers");
    if (ls >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
    LatticePoint p{parse_int_token(sx, lineno), parse_int_token(sy, lineno)};
    if (!seen.insert(p).second) {
      std::ostringstream os;
      os << "duplicate point " << p;
      throw ParseError(lineno, os.str());
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline PointSet load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return PointSet(parse_points(in));
}

struct CertEntry {
  Int radius;
  bool exists;
  Certificate cert;
  bool verified;

  friend bool operator==(const CertEntry& a, const CertEntry& b) {
    return a.radius == b.radius && a.exists == b.exists && a.cert == b.cert &&
           a.verified == b.verified;
  }
};

struct SpectrumReport {
  RationalSpectrum spectrum;
  ReducedFraction max_radius;
  std::vector<Int> integer_radii;
  std::vector<CertEntry> certificates;

  friend bool operator==(const SpectrumReport& a, const SpectrumReport& b) {
    return a.spectrum == b.spectrum && a.max_radius == b.max_radius &&
           a.integer_radii == b.integer_radii && a.certificates == b.certificates;
  }
};

// With certify, one verified certificate per integer radius; an empty
// integer spectrum gets a single refutation for radius 1 instead.
inline SpectrumReport build_spectrum_report(const PointSet& s, bool certify) {
  SpectrumReport rep;
  rep.spectrum = rational_spectrum(s);
  rep.max_radius = rep.spectrum.max();
  rep.integer_radii = integer_spectrum(s);
  if (certify) {
    std::vector<Int> radii = rep.integer_radii;
    if (radii.empty()) radii.push_back(1);
    for (const Int& r : radii) {
      auto [exists, cert] = has_radius(s, r);
      bool ok = verify_certificate(s, r, cert);
      rep.certificates.push_back({r, exists, std::move(cert), ok});
    }
  }
  return rep;
}

inline nlohmann::json point_to_json(const LatticePoint& p) {
  return {{"x", p.x.str()}, {"y", p.y.str()}};
}

inline LatticePoint point_from_json(const nlohmann::json& j) {
  return {Int(j.at("x").get<std::string>()), Int(j.at("y").get<std::string>())};
}

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  if (const auto* yes = std::get_if<CertYes>(&cert)) {
    return {{"type", "circle"},
            {"center", point_to_json(yes->circle.center)},
            {"radius", yes->circle.radius.str()}};
  }
  if (const auto* nd = std::get_if<CertNoDivisibility>(&cert)) {
    return {{"type", "no_divisibility"},
            {"a", point_to_json(nd->a)},
            {"b", point_to_json(nd->b)},
            {"r", nd->r.str()}};
  }
  const auto& nc = std::get<CertNoCovering>(cert);
  nlohmann::json wits = nlohmann::json::array();
  for (const auto& w : nc.witnesses) {
    wits.push_back({{"residue",
                     {{"m", w.residue.m.str()}, {"x", w.residue.rx.str()}, {"y", w.residue.ry.str()}}},
                    {"point", point_to_json(w.point)}});
  }
  return {{"type", "no_covering"}, {"prime", nc.prime.str()}, {"witnesses", wits}};
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "circle") {
    return CertYes{
        IntegerCircle(point_from_json(j.at("center")), Int(j.at("radius").get<std::string>()))};
  }
  if (type == "no_divisibility") {
    return CertNoDivisibility{point_from_json(j.at("a")), point_from_json(j.at("b")),
                              Int(j.at("r").get<std::string>())};
  }
  if (type == "no_covering") {
    CertNoCovering nc;
    nc.prime = Int(j.at("prime").get<std::string>());
    for (const auto& w : j.at("witnesses")) {
      const auto& res = w.at("residue");
      nc.witnesses.push_back({TorusResidue{Int(res.at("m").get<std::string>()),
                                           Int(res.at("x").get<std::string>()),
                                           Int(res.at("y").get<std::string>())},
                              point_from_json(w.at("point"))});
    }
    return nc;
  }
  throw std::runtime_error("unknown certificate type '" + type + "'");
}

inline nlohmann::json report_to_json(const SpectrumReport& rep) {
  nlohmann::json radii = nlohmann::json::array();
  for (const Int& r : rep.integer_radii) radii.push_back(r.str());
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& e : rep.certificates) {
    certs.push_back({{"radius", e.radius.str()},
                     {"exists", e.exists},
                     {"certificate", certificate_to_json(e.cert)},
                     {"verified", e.verified}});
  }
  return {{"g", rep.spectrum.g.str()},
          {"tau", rep.spectrum.tau.str()},
          {"max_radius", {{"num", rep.max_radius.num.str()}, {"den", rep.max_radius.den.str()}}},
          {"integer_spectrum", radii},
          {"certificates", certs}};
}

inline SpectrumReport report_from_json(const nlohmann::json& j) {
  SpectrumReport rep;
  rep.spectrum.g = Int(j.at("g").get<std::string>());
  rep.spectrum.tau = Int(j.at("tau").get<std::string>());
  rep.max_radius = ReducedFraction(Int(j.at("max_radius").at("num").get<std::string>()),
                                   Int(j.at("max_radius").at("den").get<std::string>()));
  for (const auto& r : j.at("integer_spectrum")) rep.integer_radii.emplace_back(r.get<std::string>());
  for (const auto& e : j.at("certificates")) {
    rep.certificates.push_back({Int(e.at("radius").get<std::string>()), e.at("exists").get<bool>(),
                                certificate_from_json(e.at("certificate")),
                                e.at("verified").get<bool>()});
  }
  return rep;
}

inline std::string describe_certificate(const Certificate& cert) {
  std::ostringstream os;
  if (const auto* yes = std::get_if<CertYes>(&cert)) {
    os << "center " << yes->circle.center << ", radius " << yes->circle.radius;
  } else if (const auto* nd = std::get_if<CertNoDivisibility>(&cert)) {
    os << nd->r << " does not divide id(" << nd->a << ", " << nd->b
       << ") = " << int_distance(nd->a, nd->b);
  } else {
    const auto& nc = std::get<CertNoCovering>(cert);
    os << "quotient covers all " << nc.prime * nc.prime << " cells of the torus mod " << nc.prime;
  }
  return os.str();
}

inline void print_report_text(std::ostream& os, const PointSet& s, const SpectrumReport& rep) {
  os << "points: " << s.size() << "\n";
  os << "g = " << rep.spectrum.g << "\n";
  os << "tau = " << rep.spectrum.tau << "\n";
  os << "max radius = " << rep.max_radius << "\n";
  os << "Lambda_Z = {";
  for (std::size_t i = 0; i < rep.integer_radii.size(); ++i) {
    if (i) os << ", ";
    os << rep.integer_radii[i];
  }
  os << "}\n";
  os << "Lambda_Q = " << rep.spectrum << "\n";
  if (!rep.certificates.empty()) {
    os << "certificates:\n";
    for (const auto& e : rep.certificates) {
      os << "  r=" << e.radius << ": " << (e.exists ? "exists, " : "refuted, ")
         << describe_certificate(e.cert) << (e.verified ? " [verified]" : " [VERIFICATION FAILED]")
         << "\n";
    }
  }
}

// starburst figure: one stroke from the origin to every primitive ray
inline std::string svg_starburst(const std::vector<LatticePoint>& rays, const Int& bound) {
  Int lo = -bound - 1, size = 2 * bound + 2;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo << " " << lo << " " << size
     << " " << size << "\">\n";
  os << "  <g stroke=\"#1f4f8f\" stroke-width=\"0.06\" stroke-linecap=\"round\">\n";
  for (const auto& p : rays) {
    os << "    <line x1=\"0\" y1=\"0\" x2=\"" << p.x << "\" y2=\"" << -p.y << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <circle cx=\"0\" cy=\"0\" r=\"0.12\" fill=\"#1f1f1f\"/>\n";
  os << "</svg>\n";
  return os.str();
}

// Minimal well-formedness scan: prolog, balanced matching tags, quoted
// attributes, no stray '<'.  Enough to catch any mangled generator output.
inline bool well_formed_xml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&](std::size_t& k) {
    while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  bool seen_element = false;
  while (i < n) {
    if (text[i] != '<') {
      if (text[i] == '>') return false;
      ++i;
      continue;
    }
    if (i + 1 >= n) return false;
    if (text.compare(i, 2, "<?") == 0) {
      std::size_t e = text.find("?>", i);
      if (e == std::string::npos) return false;
      i = e + 2;
      continue;
    }
    if (text.compare(i, 4, "<!--") == 0) {
      std::size_t e = text.find("-->", i);
      if (e == std::string::npos) return false;
      i = e + 3;
      continue;
    }
    bool closing = text[i + 1] == '/';
    std::size_t k = i + (closing ? 2 : 1);
    std::size_t name_start = k;
    while (k < n && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == ':' ||
                     text[k] == '-' || text[k] == '_'))
      ++k;
    if (k == name_start) return false;
    std::string name = text.substr(name_start, k - name_start);
    if (closing) {
      skip_ws(k);
      if (k >= n || text[k] != '>') return false;
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      i = k + 1;
      continue;
    }
    // attributes
    while (true) {
      skip_ws(k);
      if (k >= n) return false;
      if (text[k] == '>' || (text[k] == '/' && k + 1 < n && text[k + 1] == '>')) break;
      std::size_t a = k;
      while (k < n && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == ':' ||
                       text[k] == '-' || text[k] == '_'))
        ++k;
      if (k == a) return false;
      skip_ws(k);
      if (k >= n || text[k] != '=') return false;
      ++k;
      skip_ws(k);
      if (k >= n || (text[k] != '"' && text[k] != '\'')) return false;
      char quote = text[k++];
      while (k < n && text[k] != quote) {
        if (text[k] == '<') return false;
        ++k;
      }
      if (k >= n) return false;
      ++k;
    }
    if (text[k] == '/') {
      i = k + 2;
    } else {
      stack.push_back(name);
      i = k + 1;
    }
    seen_element = true;
  }
  return seen_element && stack.empty();
}

struct DensityResult {
  long long coprime, total;
};

// coprime pairs in [1, n]^2; the exact count, no estimation involved
inline DensityResult coprime_density(long long n) {
  if (n < 10) throw std::domain_error("density: n must be at least 10");
  long long cnt = 0;
  for (long long x = 1; x <= n; ++x) {
    for (long long y = 1; y <= n; ++y) {
      if (std::gcd(x, y) == 1) ++cnt;
    }
  }
  return {cnt, n * n};
}

// ratio rounded to six decimal places, computed in exact arithmetic
inline std::string density_decimal(const DensityResult& d) {
  Int scaled = (Int(d.coprime) * 1000000 + Int(d.total) / 2) / Int(d.total);
  std::string digits = scaled.str();
  while (digits.size() < 6) digits.insert(digits.begin(), '0');
  if (digits.size() == 6) return "0." + digits;
  return digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

}  // namespace latcirc::report
