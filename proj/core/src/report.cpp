#include "tvb/report.hpp"

#include <algorithm>
#include <sstream>

namespace tvb {

std::string format_ivec(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string format_qvec(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string format_divisor(const EqDivisor& d) {
  std::string out;
  bool any = false;
  for (size_t i = 0; i < d.coeffs.size(); ++i) {
    long long c = d.coeffs[i];
    if (c == 0) continue;
    if (any) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += "D" + std::to_string(i);
    any = true;
  }
  return any ? out : "0";
}

std::string format_polytope(const HPolytope& p) {
  std::string out;
  for (const auto& [n, b] : p.inequalities) {
    if (!out.empty()) out += ", ";
    std::string lhs;
    for (size_t i = 0; i < n.size(); ++i) {
      long long c = n[i];
      if (c == 0) continue;
      if (!lhs.empty()) lhs += c > 0 ? " + " : " - ";
      else if (c < 0) lhs += "-";
      long long a = c < 0 ? -c : c;
      if (a != 1) lhs += std::to_string(a) + "*";
      lhs += "x" + std::to_string(i);

    }
    if (lhs.empty()) lhs = "0";
    out += lhs + " <= " + std::to_string(b);
  }
  return "{ " + out + " }";
}

namespace {

std::string format_monomial(const CoxTerm& t) {
  std::string out;
  for (size_t v = 0; v < t.t_exp.size(); ++v)
    for (unsigned c = 0; c < t.t_exp[v]; ++c)
      out += (out.empty() ? "" : "*") + ("T" + std::to_string(v));
  for (size_t r = 0; r < t.s_exp.size(); ++r) {
    if (t.s_exp[r] == 0) continue;
    out += (out.empty() ? "" : "*") + ("S" + std::to_string(r));
    if (t.s_exp[r] > 1) out += "^" + std::to_string(t.s_exp[r]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string format_relation(const CoxRelation& r) {
  std::string out;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    Rational c = r.terms[i].coeff;
    bool neg = c < 0;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational a = neg ? Rational(-c) : c;
    std::string mono = format_monomial(r.terms[i]);
    if (a != 1)
      out += to_string(a) + "*" + mono;
    else
      out += mono;
  }
  return out;
}

namespace {

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

const char* kPalette[] = {"#c0392b", "#2471a3", "#1e8449", "#b7950b",
                          "#7d3c98", "#d35400", "#117a65", "#6c3483"};

}  // namespace

std::string render_parliament_svg(const std::vector<ParliamentEntry>& entries) {
  // Collect geometry in lattice coordinates.
  std::vector<std::vector<QVec>> outlines;
  std::vector<std::vector<IVec>> points;
  Rational minx = 0, maxx = 0, miny = 0, maxy = 0;
  auto stretch = [&](const Rational& x, const Rational& y) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& e : entries) {
    std::vector<QVec> verts;
    std::vector<IVec> pts;
    if (is_feasible(e.polytope)) {
      verts = vertices_2d(e.polytope);
      pts = lattice_points(e.polytope);
    }
    for (const auto& v : verts) stretch(v[0], v[1]);
    for (const auto& p : pts) stretch(p[0], p[1]);
    outlines.push_back(std::move(verts));
    points.push_back(std::move(pts));
  }
  const double scale = 60.0, margin = 40.0;
  double x0 = to_double(minx), y1 = to_double(maxy);
  auto px = [&](const Rational& x) { return margin + (to_double(x) - x0) * scale; };
  auto py = [&](const Rational& y) { return margin + (y1 - to_double(y)) * scale; };
  double width = 2 * margin + (to_double(maxx) - x0) * scale;
  double height = 2 * margin + (y1 - to_double(miny)) * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\">\n";
  for (size_t i = 0; i < entries.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    const auto& verts = outlines[i];
    if (verts.size() >= 2) {
      svg << "  <polygon points=\"";
      for (size_t v = 0; v < verts.size(); ++v) {
        if (v) svg << " ";
        svg << num(px(verts[v][0])) << "," << num(py(verts[v][1]));
      }
      svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    } else if (verts.size() == 1) {
      svg << "  <circle cx=\"" << num(px(verts[0][0])) << "\" cy=\""
          << num(py(verts[0][1])) << "\" r=\"5\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : points[i])
      svg << "  <circle cx=\"" << num(px(Rational(p[0]))) << "\" cy=\""
          << num(py(Rational(p[1]))) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  }
  // Origin crosshair.
  double ox = px(Rational(0)), oy = py(Rational(0));
  svg << "  <line x1=\"" << num(ox - 8) << "\" y1=\"" << num(oy) << "\" x2=\""
      << num(ox + 8) << "\" y2=\"" << num(oy)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << num(ox) << "\" y1=\"" << num(oy - 8) << "\" x2=\""
      << num(ox) << "\" y2=\"" << num(oy + 8)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tvb
