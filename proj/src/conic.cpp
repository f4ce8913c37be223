#include "cevian/conic.hpp"

#include "cevian/error.hpp"

namespace cevian {

namespace {

Mat3 checked_symmetric(Mat3 m) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[i][j] != m[j][i]) throw GeometryError(ErrorCode::DegenerateInput, "conic matrix is not symmetric");
  if (!canonicalize(m)) throw GeometryError(ErrorCode::DegenerateInput, "zero conic matrix");
  return m;
}

void require_nondegenerate(const Conic& c) {
  if (c.is_degenerate()) throw GeometryError(ErrorCode::DegenerateConic, "polarity of a degenerate conic");
}

// Rows of the linear map coefficients -> C * p.
std::array<ConicRow, 3> polar_rows(const ProjPoint& p) {
  const Rat x(p[0]), y(p[1]), z(p[2]);
  const Rat o(0);
  return {ConicRow{x, o, o, o, z, y}, ConicRow{o, y, o, z, o, x}, ConicRow{o, o, z, y, x, o}};
}

std::vector<ConicRow> cross_rows(const std::array<ConicRow, 3>& v, const ProjLine& l) {
  // (v x l)_i = v_j l_k - v_k l_j
  std::vector<ConicRow> rows;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    ConicRow r;
    for (int c = 0; c < 6; ++c) r[c] = v[j][c] * l[k] - v[k][c] * l[j];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Conic::Conic(Mat3 m) : m_(checked_symmetric(std::move(m))) {}

Conic Conic::from_coefficients(const std::vector<Int>& c) {
  return Conic(Mat3{Vec3{c[0], c[5], c[4]}, Vec3{c[5], c[1], c[3]}, Vec3{c[4], c[3], c[2]}});
}

Int Conic::evaluate(const ProjPoint& p) const { return dot(p.coords(), multiply(m_, p.coords())); }

ProjLine Conic::polar(const ProjPoint& p) const {
  require_nondegenerate(*this);
  return ProjLine(multiply(m_, p.coords()));
}

ProjPoint Conic::pole(const ProjLine& l) const {
  require_nondegenerate(*this);
  return ProjPoint(multiply(adjugate(m_), l.coords()));
}

ProjPoint Conic::center(const ProjLine& infinity) const { return pole(infinity); }

ProjLine Conic::tangent_at(const ProjPoint& p) const {
  if (!contains(p)) throw GeometryError(ErrorCode::KnownNotIncident, p.str() + " is not on the conic");
  return polar(p);
}

bool Conic::is_tangent(const ProjLine& l) const {
  require_nondegenerate(*this);
  // l is tangent iff l^T adj(C) l = 0.
  return dot(l.coords(), multiply(adjugate(m_), l.coords())) == 0;
}

Conic Conic::transformed(const ProjMap& t) const {
  const Mat3 inv = adjugate(t.matrix());
  return Conic(multiply(multiply(transpose(inv), m_), inv));
}

std::string Conic::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? " " : "") + m_[i][j].get_str();
  }
  return s + "]";
}

ConicRow incidence_condition(const ProjPoint& p) {
  const Rat x(p[0]), y(p[1]), z(p[2]);
  return {x * x, y * y, z * z, 2 * y * z, 2 * z * x, 2 * x * y};
}

std::vector<ConicRow> tangency_conditions(const ProjPoint& p, const ProjLine& l) {
  if (!on(p, l)) throw GeometryError(ErrorCode::KnownNotIncident, p.str() + " is not on the tangent " + l.str());
  return cross_rows(polar_rows(p), l);
}

std::vector<ConicRow> center_conditions(const ProjPoint& center, const ProjLine& infinity) {
  return cross_rows(polar_rows(center), infinity);
}

Conic conic_from_conditions(const std::vector<ConicRow>& conditions) {
  RatMatrix rows;
  for (const ConicRow& r : conditions) rows.emplace_back(r.begin(), r.end());
  const std::vector<RatVec> basis = nullspace(rows, 6);
  if (basis.empty()) throw GeometryError(ErrorCode::Overconstrained, "no conic satisfies all conditions");
  if (basis.size() > 1)
    throw GeometryError(ErrorCode::RankDeficient, std::to_string(basis.size()) + "-dimensional family of conics");
  return Conic::from_coefficients(integerize(basis[0]));
}

Conic conic_through_five(const std::array<ProjPoint, 5>& pts) {
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<const ProjPoint*> four;
    for (int i = 0; i < 5; ++i)
      if (i != skip) four.push_back(&pts[i]);
    bool all = true;
    for (int i = 2; i < 4 && all; ++i)
      for (int j = 1; j < i && all; ++j) all = collinear(*four[0], *four[j], *four[i]);
    if (all) throw GeometryError(ErrorCode::FourCollinear, "four of the five points are collinear");
  }
  std::vector<ConicRow> rows;
  for (const ProjPoint& p : pts) rows.push_back(incidence_condition(p));
  try {
    return conic_from_conditions(rows);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::RankDeficient) throw GeometryError(ErrorCode::UnderDetermined, e.what());
    throw;
  }
}

Conic circumconic_with_center(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& center,
                              const ProjLine& infinity) {
  std::vector<ConicRow> rows{incidence_condition(a), incidence_condition(b), incidence_condition(c)};
  for (ConicRow& r : center_conditions(center, infinity)) rows.push_back(std::move(r));
  return conic_from_conditions(rows);
}

Conic nine_point_conic(const std::array<ProjPoint, 4>& q, const ProjLine& infinity) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(q[i], q[j], q[k])) throw GeometryError(ErrorCode::DegenerateQuadrangle, "three vertices collinear");
  for (const ProjPoint& p : q)
    if (is_infinite(p, infinity)) throw GeometryError(ErrorCode::InfiniteArgument, p.str() + " is infinite");
  std::vector<ConicRow> rows;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rows.push_back(incidence_condition(midpoint(q[i], q[j], infinity)));
  rows.push_back(incidence_condition(meet(join(q[0], q[1]), join(q[2], q[3]))));
  rows.push_back(incidence_condition(meet(join(q[0], q[2]), join(q[1], q[3]))));
  rows.push_back(incidence_condition(meet(join(q[0], q[3]), join(q[1], q[2]))));
  try {
    return conic_from_conditions(rows);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::Overconstrained)
      throw GeometryError(ErrorCode::InternalInconsistency, "the nine points of the quadrangle are not on one conic");
    throw;
  }
}

ProjPoint second_intersection(const Conic& c, const ProjLine& l, const ProjPoint& known) {
  if (!on(known, l) || !c.contains(known))
    throw GeometryError(ErrorCode::KnownNotIncident, known.str() + " is not on both the line and the conic");
  // m = l x known is a second point of l. On k + t m the form is
  // t (2 k.Cm + t m.Cm), so the residual root is t = -2 k.Cm / m.Cm.
  const Vec3 m = cross(l.coords(), known.coords());
  const Vec3 cm = multiply(c.matrix(), m);
  const Int kcm = dot(known.coords(), cm);
  const Int mcm = dot(m, cm);
  if (kcm == 0 && mcm == 0) throw GeometryError(ErrorCode::DegenerateConic, "the line lies on the conic");
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = mcm * known[i] - 2 * kcm * m[i];
  return ProjPoint(r);
}

std::array<ProjPoint, 2> line_chart(const ProjLine& l) {
  std::vector<ProjPoint> found;
  for (int i = 0; i < 3 && found.size() < 2; ++i) {
    Vec3 axis{0, 0, 0};
    axis[i] = 1;
    const ProjLine coord(axis);
    if (coord == l) continue;
    ProjPoint p = meet(l, coord);
    if (found.empty() || !(found[0] == p)) found.push_back(std::move(p));
  }
  return {found.at(0), found.at(1)};
}

namespace {

// Chart parameters of a raw vector lying on l; consistent scaling across
// calls with the same chart.
std::array<Int, 2> chart_params(const Vec3& v, const std::array<ProjPoint, 2>& chart, const ProjLine& l) {
  const int i = detail::nonzero_index(l.coords());
  return {cross(v, chart[1].coords())[i], cross(chart[0].coords(), v)[i]};
}

bool canonicalize4(std::array<Int, 4>& a) {
  Int g = 0;
  for (const Int& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return false;
  for (const Int& x : a)
    if (x != 0) {
      if (sgn(x) < 0) g = -g;
      break;
    }
  for (Int& x : a) x /= g;
  return true;
}

}  // namespace

LineInvolution::LineInvolution(ProjLine base, std::array<Int, 4> action)
    : base_(std::move(base)), chart_(line_chart(base_)), action_(std::move(action)) {
  if (!canonicalize4(action_)) throw GeometryError(ErrorCode::DegenerateInput, "zero involution matrix");
  const Int d = action_[0] * action_[3] - action_[1] * action_[2];
  if (d == 0) throw GeometryError(ErrorCode::DegenerateInput, "singular line map");
  // A 2x2 matrix squares to a multiple of I without being one iff its trace is 0.
  if (action_[0] + action_[3] != 0) throw GeometryError(ErrorCode::DegenerateInput, "line map is not an involution");
}

ProjPoint LineInvolution::operator()(const ProjPoint& p) const {
  if (!on(p, base_)) throw GeometryError(ErrorCode::NotCollinear, p.str() + " is not on " + base_.str());
  const std::array<Int, 2> st = chart_params(p.coords(), chart_, base_);
  const Int s = action_[0] * st[0] + action_[1] * st[1];
  const Int t = action_[2] * st[0] + action_[3] * st[1];
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = s * chart_[0][i] + t * chart_[1][i];
  return ProjPoint(r);
}

LineInvolution induced_involution(const Conic& c, const ProjLine& l) {
  require_nondegenerate(c);
  if (c.is_tangent(l)) throw GeometryError(ErrorCode::TangentLine, l.str() + " is tangent to the conic");
  const std::array<ProjPoint, 2> chart = line_chart(l);
  // p -> l x (C p) is linear and sends p to its conjugate on l.
  std::array<std::array<Int, 2>, 2> cols;
  for (int k = 0; k < 2; ++k) {
    const Vec3 image = cross(l.coords(), multiply(c.matrix(), chart[k].coords()));
    cols[k] = chart_params(image, chart, l);
  }
  return LineInvolution(l, {cols[0][0], cols[1][0], cols[0][1], cols[1][1]});
}

bool involutions_equal(const LineInvolution& a, const LineInvolution& b) {
  if (!(a.base_line() == b.base_line()))
    throw GeometryError(ErrorCode::DifferentBaseLines, a.base_line().str() + " vs " + b.base_line().str());
  return a.action() == b.action();
}

Conic conic_with_involution_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                    const LineInvolution& psi, const ProjLine& infinity) {
  if (!(psi.base_line() == infinity))
    throw GeometryError(ErrorCode::DifferentBaseLines, "involution is not on the line at infinity");
  if (collinear(a, b, c)) throw GeometryError(ErrorCode::DegenerateInput, "collinear base points");
  for (const ProjPoint* p : {&a, &b, &c})
    if (is_infinite(*p, infinity)) throw GeometryError(ErrorCode::DegenerateInput, p->str() + " is infinite");

  // Diameters conjugate to the chords ab and ac meet at the center.
  const ProjLine d1 = join(midpoint(a, b, infinity), psi(direction(join(a, b), infinity)));
  const ProjLine d2 = join(midpoint(a, c, infinity), psi(direction(join(a, c), infinity)));
  if (d1 == d2) throw GeometryError(ErrorCode::DegenerateInput, "involution does not come from a central conic");
  const ProjPoint center = meet(d1, d2);
  if (is_infinite(center, infinity)) throw GeometryError(ErrorCode::DegenerateInput, "center at infinity");

  const std::array<std::array<const ProjPoint*, 3>, 3> pairs{{{&b, &c, &a}, {&a, &c, &b}, {&a, &b, &c}}};
  Conic result = [&] {
    for (const auto& [x, y, z] : pairs) {
      if (!collinear(center, *x, *y)) continue;
      // Center is the midpoint of xy; use the tangents at x and y instead.
      const ProjPoint t = psi(direction(join(*x, *y), infinity));
      std::vector<ConicRow> rows{incidence_condition(*z)};
      for (ConicRow& r : tangency_conditions(*x, join(*x, t))) rows.push_back(std::move(r));
      for (ConicRow& r : tangency_conditions(*y, join(*y, t))) rows.push_back(std::move(r));
      return conic_from_conditions(rows);
    }
    const ProjPoint ra = affine_combination(center, Rat(2), a, Rat(-1), infinity);
    const ProjPoint rb = affine_combination(center, Rat(2), b, Rat(-1), infinity);
    return conic_through_five({a, b, c, ra, rb});
  }();

  if (!involutions_equal(induced_involution(result, infinity), psi))
    throw GeometryError(ErrorCode::InternalInconsistency, "fitted conic induces a different involution");
  return result;
}

}  // namespace cevian
