#include "cevian/projective.hpp"

#include "cevian/error.hpp"

namespace cevian {

template <class Tag>
Homogeneous<Tag>::Homogeneous(Int x, Int y, Int z) : Homogeneous(Vec3{std::move(x), std::move(y), std::move(z)}) {}

template <class Tag>
Homogeneous<Tag>::Homogeneous(Vec3 v) : v_(std::move(v)) {
  if (!canonicalize(v_)) throw GeometryError(ErrorCode::ZeroVector, "homogeneous triple (0, 0, 0)");
}

template <class Tag>
std::string Homogeneous<Tag>::str() const {
  const bool point = std::is_same_v<Tag, PointTag>;
  return std::string(point ? "(" : "[") + v_[0].get_str() + ":" + v_[1].get_str() + ":" + v_[2].get_str() +
         (point ? ")" : "]");
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << l.str(); }

const ProjLine& barycentric_infinity() {
  static const ProjLine inf(1, 1, 1);
  return inf;
}

const ProjLine& cartesian_infinity() {
  static const ProjLine inf(0, 0, 1);
  return inf;
}

ProjPoint affine_point(const Rat& x, const Rat& y) { return ProjPoint::from_rationals(x, y, Rat(1)); }

Int incidence(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()); }

bool on(const ProjPoint& p, const ProjLine& l) { return incidence(p, l) == 0; }

bool is_infinite(const ProjPoint& p, const ProjLine& infinity) { return on(p, infinity); }

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw GeometryError(ErrorCode::EqualPoints, "join of " + p.str() + " with itself");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw GeometryError(ErrorCode::EqualLines, "meet of " + l.str() + " with itself");
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return dot(a.coords(), cross(b.coords(), c.coords())) == 0;
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return dot(a.coords(), cross(b.coords(), c.coords())) == 0;
}

ProjPoint direction(const ProjLine& l, const ProjLine& infinity) {
  if (l == infinity) throw GeometryError(ErrorCode::InfiniteArgument, "the line at infinity has no direction");
  return meet(l, infinity);
}

ProjLine parallel_through(const ProjPoint& p, const ProjPoint& dir) { return join(p, dir); }

bool parallel(const ProjLine& l, const ProjLine& m, const ProjLine& infinity) {
  return l == m || concurrent(l, m, infinity);
}

namespace detail {

int nonzero_index(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (v[i] != 0) return i;
  return -1;
}

Int bracket(const ProjPoint& p, const ProjPoint& q, const ProjLine& l) {
  // p x q is proportional to l for points on l; read off one component.
  const int i = nonzero_index(l.coords());
  return cross(p.coords(), q.coords())[i];
}

ProjLine carrier(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const ProjPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(*pts[i] == *pts[j])) {
        const ProjLine l = join(*pts[i], *pts[j]);
        for (const ProjPoint* p : pts)
          if (!on(*p, l)) throw GeometryError(ErrorCode::NotCollinear, "points do not share a line");
        return l;
      }
  throw GeometryError(ErrorCode::DegenerateQuadruple, "all four points coincide");
}

}  // namespace detail

ExtRat cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const ProjLine l = detail::carrier(a, b, c, d);
  const Int num = detail::bracket(a, c, l) * detail::bracket(b, d, l);
  const Int den = detail::bracket(a, d, l) * detail::bracket(b, c, l);
  if (den == 0) {
    if (num == 0) throw GeometryError(ErrorCode::DegenerateQuadruple, "cross-ratio is 0/0");
    return ExtRat::infinity();
  }
  Rat value(num, den);
  value.canonicalize();
  return ExtRat(value);
}

ProjPoint harmonic_conjugate(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (a == b || c == a || c == b)
    throw GeometryError(ErrorCode::CoincidentArgument, "harmonic conjugate needs three distinct points");
  const ProjLine l = join(a, b);
  if (!on(c, l)) throw GeometryError(ErrorCode::NotCollinear, c.str() + " is not on " + l.str());
  // c = [c,b] a + [a,c] b  (up to [a,b]); flip the sign of one component.
  const Int cb = detail::bracket(c, b, l);
  const Int ac = detail::bracket(a, c, l);
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = cb * a[i] - ac * b[i];
  return ProjPoint(r);
}

ProjPoint affine_combination(const ProjPoint& p, const Rat& wp, const ProjPoint& q, const Rat& wq,
                             const ProjLine& infinity) {
  const Int sp = incidence(p, infinity);
  const Int sq = incidence(q, infinity);
  if (sp == 0 || sq == 0) throw GeometryError(ErrorCode::InfiniteArgument, "affine combination of an infinite point");
  // wp * p/sp + wq * q/sq
  const Rat fp = wp / Rat(sp);
  const Rat fq = wq / Rat(sq);
  return ProjPoint::from_rationals(fp * p[0] + fq * q[0], fp * p[1] + fq * q[1], fp * p[2] + fq * q[2]);
}

ProjPoint midpoint(const ProjPoint& p, const ProjPoint& q, const ProjLine& infinity) {
  return affine_combination(p, Rat(1), q, Rat(1), infinity);
}

}  // namespace cevian
