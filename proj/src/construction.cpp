#include "cevian/construction.hpp"

#include <utility>

#include "cevian/error.hpp"

namespace cevian {

namespace {

Mat3 rational_matrix(const std::array<std::array<Rat, 3>, 3>& m) {
  RatVec flat;
  for (const auto& row : m)
    for (const Rat& x : row) flat.push_back(x);
  const std::vector<Int> ints = integerize(flat);
  Mat3 out;
  for (int i = 0; i < 9; ++i) out[i / 3][i % 3] = ints[i];
  return out;
}

Rat squared_distance(const CartesianPoint& p, const CartesianPoint& q) {
  const Rat dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

ProjMap cartesian_from_barycentric(const std::array<CartesianPoint, 3>& v) {
  return ProjMap(rational_matrix({{{v[0].x, v[1].x, v[2].x}, {v[0].y, v[1].y, v[2].y}, {Rat(1), Rat(1), Rat(1)}}}));
}

// Common point of three lines that must be concurrent.
ProjPoint concurrency_point(const ProjLine& a, const ProjLine& b, const ProjLine& c, ErrorCode code,
                            const std::string& what) {
  if (!concurrent(a, b, c)) throw GeometryError(code, what + ": lines are not concurrent");
  if (!(a == b)) return meet(a, b);
  if (!(a == c)) return meet(a, c);
  if (!(b == c)) return meet(b, c);
  throw GeometryError(code, what + ": the three lines coincide");
}

const ProjPoint kA(1, 0, 0);
const ProjPoint kB(0, 1, 0);
const ProjPoint kC(0, 0, 1);
const ProjLine kBC(1, 0, 0);
const ProjLine kCA(0, 1, 0);
const ProjLine kAB(0, 0, 1);

bool is_vertex(const ProjPoint& x) { return x == kA || x == kB || x == kC; }

const std::initializer_list<const char*> kAfterGuards = {
    "P_prime", "Q", "Q_prime", "D", "E", "F", "D3", "E3", "F3", "Qa", "Qb", "Qc",
    "T_P", "T_P_prime", "M", "S_map", "S_prime_map", "h_a", "h_b", "h_c", "inconic",
    "H", "O", "S", "X", "X_prime", "G1", "H_tilde", "Q2", "cevian_conic"};
const std::initializer_list<const char*> kNeedsOrdinaryQ = {"psi", "N_P_prime", "circumconic_O", "N_H", "T_H"};

}  // namespace

// ---------------------------------------------------------------------------

TriangleFrame::TriangleFrame(CartesianPoint a, CartesianPoint b, CartesianPoint c)
    : vertices_{std::move(a), std::move(b), std::move(c)},
      squared_sides_{squared_distance(vertices_[1], vertices_[2]), squared_distance(vertices_[2], vertices_[0]),
                     squared_distance(vertices_[0], vertices_[1])},
      to_cartesian_([this] {
        const Rat area2 = (vertices_[1].x - vertices_[0].x) * (vertices_[2].y - vertices_[0].y) -
                          (vertices_[2].x - vertices_[0].x) * (vertices_[1].y - vertices_[0].y);
        if (area2 == 0) throw GeometryError(ErrorCode::CollinearInput, "triangle vertices are collinear");
        return cartesian_from_barycentric(vertices_);
      }()),
      to_barycentric_(to_cartesian_.inverse()) {}

ProjPoint TriangleFrame::to_barycentric(const CartesianPoint& p) const { return to_barycentric_(affine_point(p.x, p.y)); }

ProjPoint TriangleFrame::to_barycentric(const ProjPoint& cartesian) const { return to_barycentric_(cartesian); }

ProjPoint TriangleFrame::to_cartesian(const ProjPoint& barycentric) const { return to_cartesian_(barycentric); }

std::optional<CartesianPoint> TriangleFrame::cartesian(const ProjPoint& barycentric) const {
  const ProjPoint h = to_cartesian_(barycentric);
  if (h[2] == 0) return std::nullopt;
  CartesianPoint c{Rat(h[0], h[2]), Rat(h[1], h[2])};
  c.x.canonicalize();
  c.y.canonicalize();
  return c;
}

Conic TriangleFrame::to_cartesian(const Conic& barycentric) const { return barycentric.transformed(to_cartesian_); }

Conic TriangleFrame::to_barycentric(const Conic& cartesian) const { return cartesian.transformed(to_barycentric_); }

Triangle::Triangle(ProjPoint a, ProjPoint b, ProjPoint c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (collinear(v_[0], v_[1], v_[2])) throw GeometryError(ErrorCode::DegenerateInput, "triangle vertices are collinear");
}

// ---------------------------------------------------------------------------

std::string_view guard_name(Guard g) {
  switch (g) {
    case Guard::OnSide: return "on_side";
    case Guard::OnAnticomplementarySide: return "on_anticomplementary_side";
    case Guard::OnMedian: return "on_median";
    case Guard::OnSteinerCircumellipse: return "on_steiner_circumellipse";
    case Guard::AtInfinity: return "at_infinity";
    case Guard::HIsVertex: return "H_is_vertex";
    case Guard::PEqualsG: return "P_equals_G";
  }
  return "unknown";
}

namespace {

struct RequirementNames {
  Guard guard;
  const char* when_true;
  const char* when_false;
};

constexpr std::array<RequirementNames, 7> kRequirementNames{{
    {Guard::OnSide, "on_sides", "off_sides"},
    {Guard::OnAnticomplementarySide, "on_anticomplementary", "off_anticomplementary"},
    {Guard::OnMedian, "on_median", "off_median"},
    {Guard::OnSteinerCircumellipse, "on_steiner", "off_steiner"},
    {Guard::AtInfinity, "at_infinity", "ordinary"},
    {Guard::HIsVertex, "H_is_vertex", "H_not_vertex"},
    {Guard::PEqualsG, "P_is_G", "P_not_G"},
}};

}  // namespace

std::string requirement_name(const Requirement& r) {
  for (const RequirementNames& n : kRequirementNames)
    if (n.guard == r.guard) return r.holds ? n.when_true : n.when_false;
  return "unknown";
}

Requirement parse_requirement(std::string_view name) {
  for (const RequirementNames& n : kRequirementNames) {
    if (name == n.when_true) return {n.guard, true};
    if (name == n.when_false) return {n.guard, false};
  }
  throw GeometryError(ErrorCode::ParseError, "unknown guard requirement \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------

void CevianConfig::block(std::initializer_list<const char*> names, const std::string& reason) {
  for (const char* n : names) put(n, Blocked{reason});
}

CevianConfig CevianConfig::derive(const TriangleFrame& frame, const CartesianPoint& p) {
  return derive(frame, frame.to_barycentric(p));
}

CevianConfig CevianConfig::derive(const TriangleFrame& frame, const ProjPoint& P) {
  if (is_vertex(P)) throw GeometryError(ErrorCode::VertexInput, "P must not be a vertex");
  const ProjLine& inf = barycentric_infinity();
  const ProjPoint G(1, 1, 1);
  CevianConfig cfg(frame);

  const Int &p = P[0], &q = P[1], &r = P[2];
  auto set = [&cfg](Guard g, bool v) { cfg.flags_[static_cast<std::size_t>(g)] = v; };
  set(Guard::OnSide, p * q * r == 0);
  set(Guard::OnAnticomplementarySide, (q + r) * (r + p) * (p + q) == 0);
  set(Guard::OnMedian, q == r || r == p || p == q);
  set(Guard::OnSteinerCircumellipse, q * r + r * p + p * q == 0);
  set(Guard::AtInfinity, p + q + r == 0);
  set(Guard::PEqualsG, P == G);
  set(Guard::HIsVertex, false);

  const ProjMap& K = complement_map();
  const ProjMap& K_inv = anticomplement_map();
  cfg.put("A", kA);
  cfg.put("B", kB);
  cfg.put("C", kC);
  cfg.put("G", G);
  cfg.put("P", P);
  cfg.put("K", K);
  cfg.put("K_inv", K_inv);
  cfg.put("D0", K(kA));
  cfg.put("E0", K(kB));
  cfg.put("F0", K(kC));
  cfg.put("steiner_circumellipse", Conic(Mat3{Vec3{0, 1, 1}, Vec3{1, 0, 1}, Vec3{1, 1, 0}}));
  {
    const auto& s = frame.squared_sides();
    const Vec3 w = integerize(s[0], s[1], s[2]);
    cfg.put("isogonal_pole", ProjPoint(w));
    cfg.put("circumcircle", Conic(Mat3{Vec3{0, w[2], w[1]}, Vec3{w[2], 0, w[0]}, Vec3{w[1], w[0], 0}}));
  }

  if (cfg.flag(Guard::OnSide) || cfg.flag(Guard::OnAnticomplementarySide)) {
    const Guard g = cfg.flag(Guard::OnSide) ? Guard::OnSide : Guard::OnAnticomplementarySide;
    cfg.block(kAfterGuards, std::string(guard_name(g)));
    cfg.block(kNeedsOrdinaryQ, std::string(guard_name(g)));
    return cfg;
  }

  const ProjPoint P_prime = isotomic(P);
  const ProjPoint Q = K(P_prime);
  cfg.put("P_prime", P_prime);
  cfg.put("Q", Q);
  cfg.put("Q_prime", K(P));

  const Triangle def = cevian_triangle(P);
  const Triangle def3 = cevian_triangle(P_prime);
  cfg.put("D", def[0]);
  cfg.put("E", def[1]);
  cfg.put("F", def[2]);
  cfg.put("D3", def3[0]);
  cfg.put("E3", def3[1]);
  cfg.put("F3", def3[2]);

  const PointTriple abc{kA, kB, kC};
  const ProjMap T_P = affine_from_triangles(abc, def.vertices(), inf);
  const ProjMap T_P_prime = affine_from_triangles(abc, def3.vertices(), inf);
  const ProjMap T_P_prime_inv = T_P_prime.inverse();
  cfg.put("T_P", T_P);
  cfg.put("T_P_prime", T_P_prime);
  const ProjMap M = T_P * K_inv * T_P_prime;
  cfg.put("M", M);
  cfg.put("S_map", T_P * T_P_prime);
  cfg.put("S_prime_map", T_P_prime * T_P);

  const char* anticevian[3] = {"Qa", "Qb", "Qc"};
  for (int i = 0; i < 3; ++i) {
    const ProjPoint v = T_P_prime_inv(abc[i]);
    Vec3 expected = Q.coords();
    expected[i] = -expected[i];
    if (!(v == ProjPoint(expected)))
      throw GeometryError(ErrorCode::InternalInconsistency, "T_P'^-1 of a vertex is not the anticevian vertex of Q");
    cfg.put(anticevian[i], v);
  }

  std::vector<ConicRow> rows;
  for (const auto& [touch, side] : {std::pair{def[0], kBC}, std::pair{def[1], kCA}, std::pair{def[2], kAB}})
    for (ConicRow& row : tangency_conditions(touch, side)) rows.push_back(std::move(row));
  const Conic inconic = conic_from_conditions(rows);
  if (!(inconic.center(inf) == Q)) throw GeometryError(ErrorCode::InternalInconsistency, "inconic center is not Q");
  cfg.put("inconic", inconic);

  cfg.put("h_a", affine_reflection(join(kA, Q), direction(join(def[1], def[2]), inf), inf));
  cfg.put("h_b", affine_reflection(join(kB, Q), direction(join(def[0], def[2]), inf), inf));
  cfg.put("h_c", affine_reflection(join(kC, Q), direction(join(def[0], def[1]), inf), inf));

  // H: lines through the vertices parallel to QD, QE, QF.
  ProjLine through[3] = {kBC, kBC, kBC};
  for (int i = 0; i < 3; ++i) through[i] = join(abc[i], direction(join(Q, def[i]), inf));
  const ProjPoint H = concurrency_point(through[0], through[1], through[2], ErrorCode::InternalInconsistency,
                                        "generalized orthocenter");
  const ProjPoint O = K(H);
  if (!(O == T_P_prime_inv(K(Q))))
    throw GeometryError(ErrorCode::InternalInconsistency, "K(H) differs from T_P'^-1(K(Q))");
  cfg.put("H", H);
  cfg.put("O", O);
  set(Guard::HIsVertex, is_vertex(H));

  for (const auto& [name, map] : {std::pair{"S", M}, std::pair{"X", T_P * T_P_prime}, std::pair{"X_prime", T_P_prime * T_P}}) {
    try {
      cfg.put(name, fixed_point(map, inf));
    } catch (const GeometryError& e) {
      cfg.put(name, Blocked{std::string(to_string(e.code()))});
    }
  }
  cfg.put("G1", T_P(G));
  cfg.put("H_tilde", T_P.inverse()(H));
  cfg.put("Q2", ProjPoint(Int(Q[0] * Q[0]), Int(Q[1] * Q[1]), Int(Q[2] * Q[2])));

  try {
    cfg.put("cevian_conic", conic_through_five({kA, kB, kC, P, Q}));
  } catch (const GeometryError& e) {
    cfg.put("cevian_conic", Blocked{cfg.flag(Guard::PEqualsG) ? "P_equals_G" : std::string(to_string(e.code()))});
  }

  if (cfg.flag(Guard::OnSteinerCircumellipse)) {
    cfg.block(kNeedsOrdinaryQ, std::string(guard_name(Guard::OnSteinerCircumellipse)));
    return cfg;
  }

  const LineInvolution psi = induced_involution(inconic, inf);
  cfg.put("psi", psi);
  const Conic n_p_prime = nine_point_conic({kA, kB, kC, P_prime}, inf);
  cfg.put("N_P_prime", n_p_prime);
  const Conic circumconic_O = [&] {
    try {
      return circumconic_with_center(kA, kB, kC, O, inf);
    } catch (const GeometryError& e) {
      // O is the midpoint of a side when H is a vertex; the center no longer
      // pins the conic down, but the conjugate-direction involution does.
      if (e.code() != ErrorCode::RankDeficient) throw;
      return conic_with_involution_through(kA, kB, kC, psi, inf);
    }
  }();
  if (!(circumconic_O == n_p_prime.transformed(T_P_prime_inv)))
    throw GeometryError(ErrorCode::InternalInconsistency, "circumconic with center O differs from T_P'^-1(N_P')");
  cfg.put("circumconic_O", circumconic_O);

  if (cfg.flag(Guard::HIsVertex)) {
    cfg.block({"N_H", "T_H"}, std::string(guard_name(Guard::HIsVertex)));
  } else {
    cfg.put("N_H", nine_point_conic({kA, kB, kC, H}, inf));
    cfg.put("T_H", affine_from_triangles(abc, cevian_triangle(H).vertices(), inf));
  }
  return cfg;
}

std::optional<Requirement> CevianConfig::first_unmet(const std::vector<Requirement>& rs) const {
  for (const Requirement& r : rs)
    if (!satisfies(r)) return r;
  return std::nullopt;
}

bool CevianConfig::available(std::string_view name) const {
  const auto it = objects_.find(name);
  return it != objects_.end() && !std::holds_alternative<Blocked>(it->second);
}

template <class T>
const T& CevianConfig::get(std::string_view name) const {
  const auto it = objects_.find(name);
  if (it == objects_.end()) throw std::out_of_range("no derived object named " + std::string(name));
  if (const auto* b = std::get_if<Blocked>(&it->second)) throw GuardViolation(b->reason);
  if (const auto* v = std::get_if<T>(&it->second)) return *v;
  throw std::logic_error("derived object " + std::string(name) + " has a different kind");
}

const ProjPoint& CevianConfig::point(std::string_view name) const { return get<ProjPoint>(name); }
const ProjMap& CevianConfig::map(std::string_view name) const { return get<ProjMap>(name); }
const Conic& CevianConfig::conic(std::string_view name) const { return get<Conic>(name); }
const LineInvolution& CevianConfig::involution(std::string_view name) const { return get<LineInvolution>(name); }

ProjPoint CevianConfig::isogonal(const ProjPoint& x) const { return reciprocal_conjugate(point("isogonal_pole"), x); }

CevianConfig CevianConfig::perturbed(std::string_view name, const Rat& dx, const Rat& dy) const {
  const std::optional<CartesianPoint> c = frame_.cartesian(point(name));
  if (!c) throw GeometryError(ErrorCode::InfinitePoint, std::string(name) + " is at infinity");
  CevianConfig copy = *this;
  copy.put(std::string(name), frame_.to_barycentric(CartesianPoint{c->x + dx, c->y + dy}));
  return copy;
}

// ---------------------------------------------------------------------------

Triangle cevian_triangle(const ProjPoint& p) {
  return Triangle(ProjPoint(0, p[1], p[2]), ProjPoint(p[0], 0, p[2]), ProjPoint(p[0], p[1], 0));
}

ProjPoint gamma_P(const CevianConfig& cfg, const ProjPoint& x) {
  if (is_vertex(x)) throw GeometryError(ErrorCode::VertexInput, "gamma_P is undefined at a vertex");
  const ProjLine la = join(kA, cfg.map("h_a")(x));
  const ProjLine lb = join(kB, cfg.map("h_b")(x));
  const ProjLine lc = join(kC, cfg.map("h_c")(x));
  return concurrency_point(la, lb, lc, ErrorCode::InternalInconsistency, "gamma_P(" + x.str() + ")");
}

ProjPoint gamma_P_pole(const CevianConfig& cfg, const ProjPoint& x) { return reciprocal_conjugate(cfg.point("Q2"), x); }

ProjPoint delta_via(const ProjMap& t, const ProjPoint& x) {
  if (is_vertex(x)) throw GeometryError(ErrorCode::VertexInput, "delta is undefined at a vertex");
  const ProjPoint vertices[3] = {kA, kB, kC};
  const ProjLine sides[3] = {kBC, kCA, kAB};
  ProjLine lines[3] = {kBC, kBC, kBC};
  for (int i = 0; i < 3; ++i) {
    const ProjPoint trace = meet(join(vertices[i], x), sides[i]);
    const ProjPoint image = meet(join(vertices[i], t(trace)), sides[i]);
    lines[i] = join(vertices[i], image);
  }
  return concurrency_point(lines[0], lines[1], lines[2], ErrorCode::InternalInconsistency, "delta(" + x.str() + ")");
}

ProjPoint delta_P(const CevianConfig& cfg, const ProjPoint& x) { return delta_via(cfg.map("T_P"), x); }

ProjPoint delta_H(const CevianConfig& cfg, const ProjPoint& x) { return delta_via(cfg.map("T_H"), x); }

PedalFeet pedal_triangle(const CevianConfig& cfg, const ProjPoint& r) {
  if (cfg.flag(Guard::OnSteinerCircumellipse))
    throw GuardViolation(std::string(guard_name(Guard::OnSteinerCircumellipse)));
  const ProjLine& inf = cfg.infinity();
  if (is_infinite(r, inf)) throw GeometryError(ErrorCode::InfinitePoint, "pedal triangle of an infinite point");
  const ProjPoint& Q = cfg.Q();
  const ProjPoint touch[3] = {cfg.point("D"), cfg.point("E"), cfg.point("F")};
  const ProjLine sides[3] = {kBC, kCA, kAB};
  return {meet(join(r, direction(join(Q, touch[0]), inf)), sides[0]),
          meet(join(r, direction(join(Q, touch[1]), inf)), sides[1]),
          meet(join(r, direction(join(Q, touch[2]), inf)), sides[2])};
}

PedalConic pedal_conic(const CevianConfig& cfg, const ProjPoint& r1) {
  const ProjLine& inf = cfg.infinity();
  if (is_infinite(r1, inf)) throw GeometryError(ErrorCode::InfinitePoint, "pedal conic of an infinite point");
  for (const char* fixed : {"Q", "Qa", "Qb", "Qc"})
    if (r1 == cfg.point(fixed)) throw GeometryError(ErrorCode::FixedPointInput, std::string(fixed) + " is fixed by gamma_P");
  ProjPoint r2 = gamma_P(cfg, r1);
  if (is_infinite(r2, inf)) throw GeometryError(ErrorCode::InfiniteConjugate, "gamma_P(R1) is at infinity");
  PedalFeet feet1 = pedal_triangle(cfg, r1);
  PedalFeet feet2 = pedal_triangle(cfg, r2);
  std::vector<ConicRow> rows;
  for (const PedalFeet* f : {&feet1, &feet2})
    for (const ProjPoint& p : *f) rows.push_back(incidence_condition(p));
  try {
    Conic c = conic_from_conditions(rows);
    return PedalConic{r1, std::move(r2), std::move(feet1), std::move(feet2), std::move(c)};
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::Overconstrained)
      throw GeometryError(ErrorCode::InternalInconsistency, "the six pedal feet are not on one conic");
    if (e.code() == ErrorCode::RankDeficient) throw GeometryError(ErrorCode::UnderDetermined, "coincident pedal feet");
    throw;
  }
}

Triangle circumcevian_triangle(const Conic& c, const Triangle& base, const ProjPoint& r) {
  for (const ProjPoint& v : base.vertices())
    if (v == r) throw GeometryError(ErrorCode::VertexInput, "circumcevian triangle of a base vertex");
  return Triangle(second_intersection(c, join(base[0], r), base[0]), second_intersection(c, join(base[1], r), base[1]),
                  second_intersection(c, join(base[2], r), base[2]));
}

Triangle tangential_triangle(const Conic& c, const Triangle& base) {
  const ProjLine t0 = c.tangent_at(base[0]);
  const ProjLine t1 = c.tangent_at(base[1]);
  const ProjLine t2 = c.tangent_at(base[2]);
  return Triangle(meet(t1, t2), meet(t2, t0), meet(t0, t1));
}

ProjPoint perspector(const Triangle& t1, const Triangle& t2) {
  return concurrency_point(join(t1[0], t2[0]), join(t1[1], t2[1]), join(t1[2], t2[2]), ErrorCode::NotPerspective,
                           "perspector");
}

ProjPoint tcc_perspector_formula(const CevianConfig& cfg, const ProjPoint& y) {
  const ProjMap& K = complement_map();
  const ProjMap& K_inv = anticomplement_map();
  const ProjPoint gy = cfg.isogonal(y);
  const ProjPoint R = K_inv(gy);
  const ProjMap T_R = affine_from_triangles({kA, kB, kC}, cevian_triangle(R).vertices(), cfg.infinity());
  return cfg.isogonal(K_inv(T_R.inverse()(K(gy))));
}

ProjPoint tcc_perspector_synthetic(const CevianConfig& cfg, const ProjPoint& y) {
  const Conic& circle = cfg.conic("circumcircle");
  const Triangle ref = cfg.reference();
  return perspector(tangential_triangle(circle, ref), circumcevian_triangle(circle, ref, y));
}

ProjPoint tcc_perspector(const CevianConfig& cfg) {
  for (const Guard g : {Guard::AtInfinity, Guard::OnSteinerCircumellipse, Guard::HIsVertex})
    if (cfg.flag(g)) throw GuardViolation(std::string(guard_name(g)));
  return tcc_perspector_formula(cfg, cfg.isogonal(cfg.Q()));
}

ProjLine simson_line(const CevianConfig& cfg, const ProjPoint& r1) {
  const Conic& circumconic = cfg.conic("circumconic_O");
  if (is_vertex(r1)) throw GeometryError(ErrorCode::NotOnCircumconic, "R1 is a vertex");
  if (!circumconic.contains(r1)) throw GeometryError(ErrorCode::NotOnCircumconic, r1.str());
  const PedalFeet feet = pedal_triangle(cfg, r1);
  if (!collinear(feet[0], feet[1], feet[2]))
    throw GeometryError(ErrorCode::InternalInconsistency, "feet of a point on the circumconic are not collinear");
  return join(feet[0], feet[1]);
}

}  // namespace cevian
