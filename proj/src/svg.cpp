#include "cevian/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace cevian {

namespace {

constexpr int kSamples = 128;
constexpr double kCanvas = 800.0;

struct Pt {
  double x;
  double y;
};

struct Viewport {
  double min_x, min_y, scale;

  Pt map(Pt p) const { return {(p.x - min_x) * scale, kCanvas - (p.y - min_y) * scale}; }
  bool near(Pt p) const {
    const Pt q = map(p);
    return q.x > -2 * kCanvas && q.x < 3 * kCanvas && q.y > -2 * kCanvas && q.y < 3 * kCanvas;
  }
  bool inside(Pt p) const {
    const Pt q = map(p);
    return q.x >= 0 && q.x <= kCanvas && q.y >= 0 && q.y <= kCanvas;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Rat ratio(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Pt to_float(const ProjPoint& cartesian) {
  return {ratio(cartesian[0], cartesian[2]).get_d(), ratio(cartesian[1], cartesian[2]).get_d()};
}

// Direction (1 - t^2 : 2t : 0) for t near tan(theta / 2); exactness of t is
// irrelevant, it only spreads the pencil.
ProjPoint pencil_direction(int i) {
  const double theta = std::numbers::pi * i / kSamples;
  const Rat t = ratio(Int(static_cast<long>(std::llround(std::tan(theta / 2) * 4096))), Int(4096));
  return ProjPoint::from_rationals(Rat(1) - t * t, Rat(2) * t, Rat(0));
}

std::vector<std::vector<Pt>> trace_conic(const Conic& cartesian, const ProjPoint& known, const Viewport& vp) {
  std::vector<std::vector<Pt>> runs(1);
  for (int i = 0; i < kSamples; ++i) {
    const ProjPoint d = pencil_direction(i);
    const ProjPoint x = second_intersection(cartesian, join(known, d), known);
    const bool usable = x[2] != 0 && vp.near(to_float(x));
    if (!usable) {
      if (!runs.back().empty()) runs.emplace_back();
      continue;
    }
    runs.back().push_back(to_float(x));
  }
  if (runs.back().empty()) runs.pop_back();
  // A closed curve: join the last run to the first through the known point.
  if (runs.size() == 1 && !runs.front().empty()) runs.front().push_back(runs.front().front());
  return runs;
}

}  // namespace

std::string render_svg(const CevianConfig& cfg) {
  const TriangleFrame& frame = cfg.frame();
  const auto& v = frame.vertices();
  double lo_x = v[0].x.get_d(), hi_x = lo_x, lo_y = v[0].y.get_d(), hi_y = lo_y;
  for (const CartesianPoint& p : v) {
    lo_x = std::min(lo_x, p.x.get_d());
    hi_x = std::max(hi_x, p.x.get_d());
    lo_y = std::min(lo_y, p.y.get_d());
    hi_y = std::max(hi_y, p.y.get_d());
  }
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double pad = 0.35 * span;
  const double side = span + 2 * pad;
  const Viewport vp{(lo_x + hi_x - side) / 2, (lo_y + hi_y - side) / 2, kCanvas / side};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto polygon = [&](const std::array<ProjPoint, 3>& pts, const char* style) {
    os << "<polygon points=\"";
    for (const ProjPoint& p : pts) {
      const Pt q = vp.map(to_float(frame.to_cartesian(p)));
      os << num(q.x) << ',' << num(q.y) << ' ';
    }
    os << "\" " << style << "/>\n";
  };
  polygon({cfg.A(), cfg.B(), cfg.C()}, "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
  if (cfg.available("D"))
    polygon({cfg.point("D"), cfg.point("E"), cfg.point("F")},
            "fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");

  const std::pair<const char*, const char*> conics[] = {
      {"circumcircle", "#999999"}, {"inconic", "#1f5fbf"}, {"circumconic_O", "#bf1f1f"}};
  for (const auto& [name, color] : conics) {
    if (!cfg.available(name)) continue;
    const Conic c = frame.to_cartesian(cfg.conic(name));
    const ProjPoint known = frame.to_cartesian(std::string_view(name) == "inconic" ? cfg.point("D") : cfg.A());
    for (const auto& run : trace_conic(c, known, vp)) {
      if (run.size() < 2) continue;
      os << "<polyline id=\"" << name << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
      for (const Pt& p : run) {
        const Pt q = vp.map(p);
        os << num(q.x) << ',' << num(q.y) << ' ';
      }
      os << "\"/>\n";
    }
  }

  for (const char* name : {"A", "B", "C", "G", "P", "Q", "H", "O", "S", "D", "E", "F"}) {
    if (!cfg.available(name)) continue;
    const auto c = frame.cartesian(cfg.point(name));
    if (!c) continue;
    const Pt p{c->x.get_d(), c->y.get_d()};
    if (!vp.inside(p)) continue;
    const Pt q = vp.map(p);
    os << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"3\" fill=\"black\"/>\n"
       << "<text x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y - 5)
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cevian
