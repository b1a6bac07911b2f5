#include "tropbound/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tropbound {

namespace {

struct P {
  double x = 0;
  double y = 0;
};

P to_double(const Point2 &p) { return {p.x.get_d(), p.y.get_d()}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  // Avoid "-0.0000".
  if (std::string(buf) == "-0.0000")
    return "0.0000";
  return buf;
}

double stroke(std::int64_t w) {
  return 2.0 * static_cast<double>(std::min<std::int64_t>(w, 5));
}

} // namespace

std::string svg_document(const TropicalSolution &s) {
  const auto &t = s.type.topology;
  std::vector<P> vertices;
  for (const auto &v : s.vertices)
    vertices.push_back(to_double(v));
  std::vector<P> points;
  for (const auto &p : s.points)
    points.push_back(to_double(p));

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto extend = [&](const P &p) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const auto &v : vertices)
    extend(v);
  for (const auto &p : points)
    extend(p);
  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0)
    span = 1;

  // Leg ends: long enough to pass every point placed on the leg.
  std::vector<P> leg_end(t.edges.size());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (!t.is_leg(e))
      continue;
    const auto &d = s.type.directions[e];
    const double norm = std::hypot(static_cast<double>(d.x),
                                   static_cast<double>(d.y));
    double reach = 0.4 * span;
    for (std::size_t j = 0; j < s.points.size(); ++j)
      if (s.type.point_edge[j] == e)
        reach = std::max(reach, 1.25 * s.point_offset[j].get_d() * norm);
    const P &from = vertices[t.edges[e].first - t.num_legs];
    leg_end[e] = {from.x + reach * d.x / norm, from.y + reach * d.y / norm};
    extend(leg_end[e]);
  }
  span = std::max({max_x - min_x, max_y - min_y, 1e-12});

  constexpr double size = 600.0;
  constexpr double margin = 30.0;
  const double scale = (size - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - min_x) * scale; };
  auto sy = [&](double y) { return size - margin - (y - min_y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
         "height=\"600\" viewBox=\"0 0 600 600\">\n";
  out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto [parent, child] = t.edges[e];
    const P &a = vertices[parent - t.num_legs];
    const P b = t.is_leg(e) ? leg_end[e] : vertices[child - t.num_legs];
    const auto w = weight(s.type.directions[e]);
    out << "<line class=\"" << (t.is_leg(e) ? "leg" : "bounded")
        << "\" data-weight=\"" << w << "\" x1=\"" << fmt(sx(a.x))
        << "\" y1=\"" << fmt(sy(a.y)) << "\" x2=\"" << fmt(sx(b.x))
        << "\" y2=\"" << fmt(sy(b.y)) << "\" stroke=\"black\" stroke-width=\""
        << fmt(stroke(w)) << "\"/>\n";
  }
  constexpr double arm = 7.0;
  for (const auto &p : points) {
    const double cx = sx(p.x), cy = sy(p.y);
    out << "<g class=\"point\">"
        << "<line x1=\"" << fmt(cx - arm) << "\" y1=\"" << fmt(cy - arm)
        << "\" x2=\"" << fmt(cx + arm) << "\" y2=\"" << fmt(cy + arm)
        << "\" stroke=\"red\" stroke-width=\"2\"/>"
        << "<line x1=\"" << fmt(cx - arm) << "\" y1=\"" << fmt(cy + arm)
        << "\" x2=\"" << fmt(cx + arm) << "\" y2=\"" << fmt(cy - arm)
        << "\" stroke=\"red\" stroke-width=\"2\"/></g>\n";
  }
  out << "<text x=\"10\" y=\"20\" font-size=\"14\">multiplicity "
      << s.multiplicity.get_str() << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void render_svg(const TropicalSolution &solution,
                const std::filesystem::path &out) {
  std::ofstream file(out, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write " + out.string());
  file << svg_document(solution);
  if (!file)
    throw std::runtime_error("failed writing " + out.string());
}

std::vector<std::filesystem::path>
render_all(const std::vector<TropicalSolution> &solutions,
           const std::filesystem::path &dir, const std::string &stem) {
  std::vector<std::filesystem::path> written;
  if (solutions.empty())
    return written;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    auto path = dir / (stem + "_" + std::to_string(i) + ".svg");
    render_svg(solutions[i], path);
    written.push_back(std::move(path));
  }
  return written;
}

} // namespace tropbound
