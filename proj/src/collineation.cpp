#include "cevian/collineation.hpp"

#include "cevian/error.hpp"

namespace cevian {

namespace {

Mat3 checked(Mat3 m) {
  if (det(m) == 0) throw GeometryError(ErrorCode::NotInvertible, "singular collineation matrix");
  canonicalize(m);
  return m;
}

Mat3 columns(const Vec3& a, const Vec3& b, const Vec3& c) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m[i] = {a[i], b[i], c[i]};
  return m;
}

}  // namespace

ProjMap::ProjMap(Mat3 m) : m_(checked(std::move(m))) {}

ProjPoint ProjMap::operator()(const ProjPoint& p) const { return ProjPoint(multiply(m_, p.coords())); }

ProjLine ProjMap::operator()(const ProjLine& l) const {
  return ProjLine(multiply(transpose(adjugate(m_)), l.coords()));
}

ProjMap ProjMap::inverse() const { return ProjMap(adjugate(m_)); }

bool ProjMap::is_affine(const ProjLine& infinity) const { return (*this)(infinity) == infinity; }

std::string ProjMap::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? " " : "") + m_[i][j].get_str();
  }
  return s + "]";
}

ProjMap affine_from_triangles(const PointTriple& src, const PointTriple& dst, const ProjLine& infinity) {
  for (const PointTriple* t : {&src, &dst}) {
    for (const ProjPoint& p : *t)
      if (is_infinite(p, infinity)) throw GeometryError(ErrorCode::InfiniteInput, p.str() + " is infinite");
    if (collinear((*t)[0], (*t)[1], (*t)[2]))
      throw GeometryError(ErrorCode::CollinearInput, "triangle vertices are collinear");
  }
  // Scale each vertex to unit weight on the line at infinity; the matrix
  // sending those representatives to each other preserves the weight, so it
  // fixes the line at infinity.
  Int ws[3], wd[3];
  for (int i = 0; i < 3; ++i) {
    ws[i] = incidence(src[i], infinity);
    wd[i] = incidence(dst[i], infinity);
  }
  Vec3 sc[3], dc[3];
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      // src_i / ws_i and dst_i / wd_i, cleared by the product of all weights.
      sc[i][k] = src[i][k] * ws[(i + 1) % 3] * ws[(i + 2) % 3];
      dc[i][k] = dst[i][k] * wd[(i + 1) % 3] * wd[(i + 2) % 3];
    }
  }
  const Mat3 s = columns(sc[0], sc[1], sc[2]);
  const Mat3 d = columns(dc[0], dc[1], dc[2]);
  // Both column sets carry a common factor, which drops out projectively.
  return ProjMap(multiply(d, adjugate(s)));
}

ProjMap map_from_four_points(const PointQuad& src, const PointQuad& dst) {
  const auto frame = [](const PointQuad& q) {
    const Mat3 base = columns(q[0].coords(), q[1].coords(), q[2].coords());
    if (det(base) == 0) throw GeometryError(ErrorCode::DegeneratePosition, "three of the four points are collinear");
    const Vec3 lambda = multiply(adjugate(base), q[3].coords());
    for (const Int& x : lambda)
      if (x == 0) throw GeometryError(ErrorCode::DegeneratePosition, "three of the four points are collinear");
    Mat3 f = base;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f[i][j] *= lambda[j];
    return f;
  };
  const Mat3 fs = frame(src);
  const Mat3 fd = frame(dst);
  return ProjMap(multiply(fd, adjugate(fs)));
}

ProjMap affine_reflection(const ProjLine& axis, const ProjPoint& dir, const ProjLine& infinity) {
  if (axis == infinity) throw GeometryError(ErrorCode::DegenerateInput, "axis is the line at infinity");
  if (!is_infinite(dir, infinity)) throw GeometryError(ErrorCode::NotADirection, dir.str() + " is not at infinity");
  if (on(dir, axis)) throw GeometryError(ErrorCode::DirectionOnAxis, dir.str() + " lies on the axis");
  // Harmonic homology with center dir and axis `axis`: x -> (a.d) x - 2 (a.x) d.
  const Int ad = incidence(dir, axis);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? ad : Int(0)) - 2 * dir[i] * axis[j];
  return ProjMap(m);
}

ProjMap half_turn(const ProjPoint& center, const ProjLine& infinity) {
  const Int w = incidence(center, infinity);
  if (w == 0) throw GeometryError(ErrorCode::InfiniteArgument, "half-turn about an infinite point");
  // x -> 2 (inf.x) c - w x
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = 2 * center[i] * infinity[j] - (i == j ? w : Int(0));
  return ProjMap(m);
}

ProjPoint fixed_point(const ProjMap& m, const ProjLine& infinity) {
  if (!m.is_affine(infinity)) throw GeometryError(ErrorCode::NotAffine, "map does not preserve the line at infinity");
  // inf^T M = lambda inf^T; ordinary fixed points are eigenvectors for lambda.
  const Mat3& a = m.matrix();
  const int k = detail::nonzero_index(infinity.coords());
  Int row_k = 0;
  for (int i = 0; i < 3; ++i) row_k += infinity[i] * a[i][k];
  Rat lambda(row_k, infinity[k]);
  lambda.canonicalize();
  RatMatrix rows(3, RatVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[i][j] = Rat(a[i][j]) - (i == j ? lambda : Rat(0));
  const std::vector<RatVec> basis = nullspace(rows, 3);
  bool any_ordinary = false;
  for (const RatVec& v : basis) {
    const ProjPoint p = ProjPoint::from_rationals(v[0], v[1], v[2]);
    if (!is_infinite(p, infinity)) any_ordinary = true;
  }
  if (basis.size() == 1 && any_ordinary) return ProjPoint::from_rationals(basis[0][0], basis[0][1], basis[0][2]);
  if (any_ordinary) throw GeometryError(ErrorCode::NonIsolatedFixedPoints, "map fixes a line or the whole plane");
  throw GeometryError(ErrorCode::TranslationNoFixedPoint, "map has no ordinary fixed point");
}

const ProjMap& complement_map() {
  static const ProjMap k(Mat3{Vec3{0, 1, 1}, Vec3{1, 0, 1}, Vec3{1, 1, 0}});
  return k;
}

const ProjMap& anticomplement_map() {
  static const ProjMap k(Mat3{Vec3{-1, 1, 1}, Vec3{1, -1, 1}, Vec3{1, 1, -1}});
  return k;
}

QuadMap::QuadMap(ProjPoint pole) : pole_(std::move(pole)) {
  for (int i = 0; i < 3; ++i)
    if (pole_[i] == 0) throw GeometryError(ErrorCode::OnSideLine, "pole " + pole_.str() + " lies on a side line");
}

ProjPoint QuadMap::operator()(const ProjPoint& x) const {
  for (int i = 0; i < 3; ++i)
    if (x[i] == 0) throw GeometryError(ErrorCode::OnSideLine, x.str() + " lies on a side line");
  return ProjPoint(Int(pole_[0] * x[1] * x[2]), Int(pole_[1] * x[2] * x[0]), Int(pole_[2] * x[0] * x[1]));
}

ProjPoint reciprocal_conjugate(const ProjPoint& pole, const ProjPoint& x) { return QuadMap(pole)(x); }

ProjPoint isotomic(const ProjPoint& x) { return reciprocal_conjugate(ProjPoint(1, 1, 1), x); }

}  // namespace cevian
