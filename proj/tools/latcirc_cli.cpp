// latcirc: circumscribed-circle data for finite sets of lattice points.
//
// Exit codes: 0 success, 2 input parse failure, 3 domain violation,
// 4 the requested circle does not exist, 5 I/O failure.

#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace latcirc;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoCircle = 4;
constexpr int kExitIo = 5;

Int parse_cli_int(const std::string& text, const std::string& flag) {
  std::size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument(flag + ": bad integer '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw std::invalid_argument(flag + ": bad integer '" + text + "'");
  }
  return Int(text);
}

int cmd_spectrum(const std::string& path, bool as_json, bool certify) {
  PointSet s = report::load_point_file(path);
  report::SpectrumReport rep = report::build_spectrum_report(s, certify);
  if (as_json) {
    std::cout << report::report_to_json(rep).dump(2) << "\n";
  } else {
    report::print_report_text(std::cout, s, rep);
  }
  return kExitOk;
}

int cmd_circle(const std::string& path, const std::string& radius_text) {
  PointSet s = report::load_point_file(path);
  Int r = parse_cli_int(radius_text, "--radius");
  auto [exists, cert] = has_radius(s, r);
  std::cout << "points: " << s.size() << "\n";
  std::cout << "radius: " << r << "\n";
  if (!exists) {
    std::cout << "no integer circumscribed circle of radius " << r << "\n";
    std::cout << "refutation: " << report::describe_certificate(cert) << "\n";
    return kExitNoCircle;
  }
  const auto& circle = std::get<CertYes>(cert).circle;
  std::cout << "center = " << circle.center << "\n";
  bool ok = verify_certificate(s, r, cert);
  std::cout << "audit: all " << s.size() << " points at integer distance " << r << " from "
            << circle.center << (ok ? " [OK]" : " [FAILED]") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_check(const std::string& path) {
  PointSet s = report::load_point_file(path);
  if (s.empty()) throw std::invalid_argument("check: empty point set");
  std::cout << "points: " << s.size() << "\n";
  std::vector<Int> cov = covering_primes(s);
  if (!cov.empty()) {
    std::cout << "covering primes:";
    for (const Int& t : cov) std::cout << " " << t;
    std::cout << "\n";
    std::cout << "tori-transparent: no\n";
    std::cout << "no integer circumscribed circle exists for any radius\n";
    return kExitNoCircle;
  }
  std::cout << "covering primes: none\n";
  std::cout << "tori-transparent: yes\n";
  Int bound = 2 * bounding_box(s).span() + 4;
  if (bound < 16) bound = 16;
  LatticePoint center{0, 0};
  if (auto found = unit_center_search(s, bound)) {
    center = *found;
    std::cout << "unit center (search) = " << center << "\n";
  } else {
    auto [c, trace] = unit_center_crt(s);
    center = c;
    std::cout << "unit center (residue construction) = " << center << "\n";
    std::cout << "audit trail:\n";
    std::cout << "  N = " << trace.n << "\n";
    std::cout << "  lcm(1..N) = " << trace.lcm_modulus << "\n";
    std::cout << "  shift into positive quadrant = " << trace.shift << "\n";
    std::cout << "  avoided point mod 2..N = " << trace.avoided << "\n";
    std::cout << "  beta = " << trace.beta << "\n";
    std::cout << "  primes dodged in (N, beta]: " << trace.primes.size() << "\n";
    std::cout << "  alpha = " << trace.alpha << "\n";
  }
  bool ok = true;
  for (const auto& p : s) ok = ok && int_distance(center, p) == 1;
  std::cout << "audit: all " << s.size() << " points at integer distance 1"
            << (ok ? " [OK]" : " [FAILED]") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int cmd_starburst(long long bound, const std::string& svg_path) {
  if (bound < 1 || bound > 4096)
    throw std::domain_error("starburst: bound must be between 1 and 4096");
  std::vector<LatticePoint> rays = farey_starburst(Int(bound));
  if (svg_path.empty()) {
    for (const auto& p : rays) std::cout << p << "\n";
    return kExitOk;
  }
  std::ofstream out(svg_path);
  if (!out) throw report::IoError("cannot open '" + svg_path + "' for writing");
  out << report::svg_starburst(rays, Int(bound));
  out.flush();
  if (!out) throw report::IoError("failed writing '" + svg_path + "'");
  std::cout << "wrote " << svg_path << " (" << rays.size() << " rays)\n";
  return kExitOk;
}

int cmd_density(long long n) {
  report::DensityResult d = report::coprime_density(n);
  std::cout << "coprime pairs: " << d.coprime << " / " << d.total << "\n";
  std::cout << "density = " << report::density_decimal(d) << "\n";
  std::cout << "reference 6/pi^2 = 0.607927\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circumscribed circles of finite lattice point sets"};
  app.require_subcommand(1);

  std::string spectrum_file;
  bool spectrum_json = false, spectrum_certify = false;
  CLI::App* spectrum = app.add_subcommand("spectrum", "integer and rational radius spectra");
  spectrum->add_option("file", spectrum_file, "point file")->required();
  spectrum->add_flag("--json", spectrum_json, "emit JSON instead of text");
  spectrum->add_flag("--certify", spectrum_certify, "attach a verified certificate per radius");

  std::string circle_file, circle_radius;
  CLI::App* circle = app.add_subcommand("circle", "circumscribed circle of a given radius");
  circle->add_option("file", circle_file, "point file")->required();
  circle->add_option("--radius", circle_radius, "integer radius")->required();

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "transparency check and unit center");
  check->add_option("file", check_file, "point file")->required();

  long long starburst_bound = 0;
  std::string starburst_svg;
  CLI::App* starburst = app.add_subcommand("starburst", "primitive rays sorted by angle");
  starburst->add_option("--bound", starburst_bound, "max-norm bound")->required();
  starburst->add_option("--svg", starburst_svg, "write an SVG figure to this path");

  long long density_n = 0;
  CLI::App* density = app.add_subcommand("density", "density of visible lattice points");
  density->add_option("--n", density_n, "count coprime pairs in [1, n]^2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_file, spectrum_json, spectrum_certify);
    if (circle->parsed()) return cmd_circle(circle_file, circle_radius);
    if (check->parsed()) return cmd_check(check_file);
    if (starburst->parsed()) return cmd_starburst(starburst_bound, starburst_svg);
    if (density->parsed()) return cmd_density(density_n);
  } catch (const report::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const report::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const latcirc::NoCircleError& e) {
    std::cerr << e.what() << "\n";
    return kExitNoCircle;
  } catch (const latcirc::CoveringPrimeError& e) {
    std::cerr << e.what() << "\n";
    return kExitNoCircle;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
