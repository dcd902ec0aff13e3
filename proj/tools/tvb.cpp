// Command line frontend: parse a bundle file, run one computation, print a
// deterministic report. Exit codes: 0 computed, 1 input/usage error,
// 2 verdict `unknown`.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tvb/cox.hpp"
#include "tvb/io.hpp"
#include "tvb/matroid.hpp"
#include "tvb/positivity.hpp"
#include "tvb/report.hpp"

namespace {

using namespace tvb;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

size_t default_kmax() {
  if (const char* v = std::getenv("TVB_KMAX")) {
    char* end = nullptr;
    long k = std::strtol(v, &end, 10);
    if (end && *end == '\0' && k >= 1) return static_cast<size_t>(k);
  }
  return 3;
}

std::vector<long long> parse_csv_ints(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw Error("bad_int", "not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot write " + path);
  f << content;
}

int cmd_check(const ToricVectorBundle& e) {
  BundleReport r = validate_bundle(e);
  std::cout << "smooth: " << (r.fan_report.smooth ? "yes" : "no") << "\n";
  std::cout << "complete: " << (r.fan_report.complete ? "yes" : "no") << "\n";
  std::cout << "compatible: " << (r.compatible ? "yes" : "no") << "\n";
  if (!r.compatible) {
    std::cout << "failure: " << r.failure << "\n";
    return kExitError;
  }
  std::cout << "rank: " << e.rank << "\n";
  std::cout << "rays: " << e.fan.n_rays() << "\n";
  for (size_t ci = 0; ci < r.cone_characters.size(); ++ci) {
    std::cout << "cone " << ci << " characters:";
    for (const auto& [u, mult] : r.cone_characters[ci].characters)
      std::cout << " " << format_ivec(u) << "x" << mult;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_parliament(const ToricVectorBundle& e, const std::string& svg_path) {
  auto entries = parliament(e);
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& en = entries[i];
    std::cout << "e" << i << ": v=" << format_qvec(en.vector)
              << " D=" << format_divisor(en.divisor)
              << " P=" << format_polytope(en.polytope);
    auto pts = lattice_points(en.polytope);
    std::cout << " lattice_points=[";
    for (size_t j = 0; j < pts.size(); ++j)
      std::cout << (j ? " " : "") << format_ivec(pts[j]);
    std::cout << "]\n";
  }
  if (!svg_path.empty()) write_file(svg_path, render_parliament_svg(entries));
  return kExitOk;
}

int cmd_h0(const ToricVectorBundle& e, const std::string& u_csv) {
  if (u_csv.empty()) {
    std::cout << "h0_dim: " << h0_dim(e) << "\n";
    return kExitOk;
  }
  auto u = parse_csv_ints(u_csv);
  if (u.size() != e.fan.dim)
    throw Error("bad_character", "--u needs " + std::to_string(e.fan.dim) +
                                     " coordinates");
  Subspace s = h0_component(e, u);
  std::cout << "u: " << format_ivec(u) << "\n";
  std::cout << "dim: " << s.dim() << "\n";
  for (const auto& row : s.basis())
    std::cout << "basis: " << format_qvec(row) << "\n";
  return kExitOk;
}

int cmd_sections(const ToricVectorBundle& e, size_t k, const std::string& t_csv) {
  ToricVectorBundle f = sym_power(e, k);
  if (!t_csv.empty()) {
    auto t = parse_csv_ints(t_csv);
    if (t.size() != e.fan.n_rays())
      throw Error("bad_twist", "--twist needs " + std::to_string(e.fan.n_rays()) +
                                   " coefficients");
    f = twist(f, EqDivisor(t));
  }
  std::cout << "sym: " << k << "\n";
  std::cout << "h0_dim: " << h0_dim(f) << "\n";
  for (const auto& u : h0_support_region(f)) {
    long long d = h0_component(f, u).dim();
    if (d > 0) std::cout << "u=" << format_ivec(u) << " dim=" << d << "\n";
  }
  return kExitOk;
}

int cmd_curves(const ToricVectorBundle& e) {
  for (const auto& s : all_curve_splittings(e)) {
    std::cout << "wall tau={";
    for (size_t i = 0; i < s.wall.tau.size(); ++i)
      std::cout << (i ? "," : "") << s.wall.tau[i];
    std::cout << "} cones " << s.wall.left << "|" << s.wall.right << ":";
    for (const auto& p : s.pairs) std::cout << " O(" << p.degree << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_nef(const ToricVectorBundle& e) {
  bool v = is_nef(e);
  std::cout << "nef: " << (v ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_ample(const ToricVectorBundle& e) {
  bool v = is_ample(e);
  std::cout << "ample: " << (v ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_gg(const ToricVectorBundle& e) {
  Matroid m = build_matroid(e);
  GGResult r = is_globally_generated(e, m);
  std::cout << "globally_generated: " << (r.generated ? "yes" : "no") << "\n";
  if (r.generated) {
    for (size_t ci = 0; ci < r.witnesses.size(); ++ci) {
      std::cout << "cone " << ci << " assignment:";
      for (size_t gi : r.witnesses[ci]) std::cout << " e" << gi;
      std::cout << "\n";
    }
  } else {
    for (size_t ci : r.failing_cones) {
      std::cout << "failing cone " << ci << " rays {";
      const auto& cone = e.fan.max_cones[ci];
      for (size_t i = 0; i < cone.size(); ++i)
        std::cout << (i ? "," : "") << cone[i];
      std::cout << "}: no injective assignment of ground vectors with e_u in"
                << " all E^rho(<u,rho>) covers its characters\n";
    }
  }
  return kExitOk;
}

int cmd_veryample(const ToricVectorBundle& e) {
  bool v = is_very_ample(e);
  std::cout << "very_ample: " << (v ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_big(const ToricVectorBundle& e, size_t k_max) {
  BigResult r = is_big(e, k_max);
  if (!r.big) {
    std::cout << "big: unknown (no full-dimensional parliament polytope"
              << " through symmetric degree " << k_max << ")\n";
    return kExitUnknown;
  }
  std::cout << "big: yes\n";
  std::cout << "witness: k=" << r.witness->k
            << " v=" << format_qvec(r.witness->vector)
            << " D=" << format_divisor(r.witness->divisor) << "\n";
  return kExitOk;
}

int cmd_cox(const ToricVectorBundle& e, size_t k_max) {
  CoxPresentation p = presentation(e, k_max);
  std::cout << "ray_variables: " << p.n_rays << "\n";
  std::cout << "generators: " << p.gens.elements.size() << "\n";
  for (size_t i = 0; i < p.gens.elements.size(); ++i) {
    const auto& el = p.gens.elements[i];
    std::cout << "T" << i << ": deg=" << el.degree
              << " v=" << format_qvec(el.vector)
              << " D=" << format_divisor(el.divisor) << "\n";
  }
  if (p.gens.stabilized_at)
    std::cout << "stabilized_at: " << *p.gens.stabilized_at << "\n";
  else
    std::cout << "stabilized_at: none (within k_max=" << p.gens.k_max << ")\n";
  std::cout << "relations: " << p.relations.size() << "\n";
  for (const auto& r : p.relations)
    std::cout << "[" << r.tag << "] " << format_relation(r) << "\n";
  return kExitOk;
}

int cmd_frobenius(const ToricVectorBundle& e, long long k, const std::string& out) {
  ToricVectorBundle f = frobenius_pullback(e, k);
  std::string doc = serialize_bundle(f);
  if (out.empty())
    std::cout << doc;
  else
    write_file(out, doc);
  return kExitOk;
}

int cmd_sympow(const ToricVectorBundle& e, size_t k, const std::string& out) {
  ToricVectorBundle f = sym_power(e, k);
  std::string doc = serialize_bundle(f);
  if (out.empty())
    std::cout << doc;
  else
    write_file(out, doc);
  return kExitOk;
}

int cmd_cayley(const ToricVectorBundle& e) {
  Matroid m = build_matroid(e);
  CayleyData c = cayley_data(m, e.fan);
  std::cout << "s: " << c.s << "\n";
  for (size_t i = 0; i < c.lifted_rays.size(); ++i)
    std::cout << "lifted_ray " << i << ": " << format_ivec(c.lifted_rays[i])
              << "\n";
  for (size_t i = 0; i < c.simplex_rays.size(); ++i)
    std::cout << "simplex_ray " << i << ": " << format_ivec(c.simplex_rays[i])
              << "\n";
  std::cout << "of_coeffs:";
  for (long long a : c.of_coeffs) std::cout << " " << a;
  std::cout << "\n";
  std::cout << "p_of: " << format_polytope(c.p_of) << "\n";
  for (size_t i = 0; i < m.ground.size(); ++i)
    std::cout << "fiber " << i << ": " << format_polytope(c.fiber(i)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for toric vector bundles in"
               " Klyachko filtration form"};
  app.require_subcommand(1);

  std::string file, svg_path, u_csv, t_csv, out_path;
  size_t sym_k = 1, kmax = default_kmax();
  long long frob_k = 1;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "bundle description file")->required();
  };

  auto* check = app.add_subcommand("check", "validate fan and filtrations");
  add_file(check);
  auto* parl = app.add_subcommand("parliament", "parliament of polytopes");
  add_file(parl);
  parl->add_option("--svg", svg_path, "write an SVG figure to PATH");
  auto* h0 = app.add_subcommand("h0", "global sections");
  add_file(h0);
  h0->add_option("--u", u_csv, "character u as comma-separated integers");
  auto* sections = app.add_subcommand("sections", "sections of a twisted power");
  add_file(sections);
  sections->add_option("--sym", sym_k, "symmetric power degree")->required();
  sections->add_option("--twist", t_csv, "twist coefficients t1,..,tn");
  auto* curves = app.add_subcommand("curves", "splitting on invariant curves");
  add_file(curves);
  auto* nef = app.add_subcommand("nef", "nefness verdict");
  add_file(nef);
  auto* ample = app.add_subcommand("ample", "ampleness verdict");
  add_file(ample);
  auto* gg = app.add_subcommand("gg", "global generation verdict");
  add_file(gg);
  auto* va = app.add_subcommand("veryample", "very-ampleness verdict");
  add_file(va);
  auto* big = app.add_subcommand("big", "bigness search up to --kmax");
  add_file(big);
  big->add_option("--kmax", kmax, "largest symmetric degree searched");
  auto* cox = app.add_subcommand("cox", "Cox ring presentation up to --kmax");
  add_file(cox);
  cox->add_option("--kmax", kmax, "largest symmetric degree searched");
  auto* frob = app.add_subcommand("frobenius", "Frobenius pullback");
  add_file(frob);
  frob->add_option("--k", frob_k, "multiplication factor")->required();
  frob->add_option("--out", out_path, "output file (default: stdout)");
  auto* sympow = app.add_subcommand("sympow", "symmetric power bundle");
  add_file(sympow);
  sympow->add_option("--k", sym_k, "symmetric degree")->required();
  sympow->add_option("--out", out_path, "output file (default: stdout)");
  auto* cayley = app.add_subcommand("cayley", "Cayley lift of the parliament");
  add_file(cayley);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    ToricVectorBundle e = tvb::load_bundle(file);
    if (check->parsed()) return cmd_check(e);
    if (parl->parsed()) return cmd_parliament(e, svg_path);
    if (h0->parsed()) return cmd_h0(e, u_csv);
    if (sections->parsed()) return cmd_sections(e, sym_k, t_csv);
    if (curves->parsed()) return cmd_curves(e);
    if (nef->parsed()) return cmd_nef(e);
    if (ample->parsed()) return cmd_ample(e);
    if (gg->parsed()) return cmd_gg(e);
    if (va->parsed()) return cmd_veryample(e);
    if (big->parsed()) return cmd_big(e, kmax);
    if (cox->parsed()) return cmd_cox(e, kmax);
    if (frob->parsed()) return cmd_frobenius(e, frob_k, out_path);
    if (sympow->parsed()) return cmd_sympow(e, sym_k, out_path);
    if (cayley->parsed()) return cmd_cayley(e);
  } catch (const tvb::Error& err) {
    std::cerr << "error [" << err.code << "]: " << err.what() << "\n";
    return kExitError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
