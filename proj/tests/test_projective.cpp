#include "doctest.h"

#include "cevian/collineation.hpp"
#include "cevian/projective.hpp"
#include "support.hpp"

using namespace cevian;
using testing::bary;
using testing::error_of;
using testing::Gen;
using testing::q;

namespace {

ProjPoint xaxis(long num, long den = 1) { return affine_point(q(num, den), q(0)); }
const ProjPoint kXInfinity(Int(1), Int(0), Int(0));

}  // namespace

TEST_CASE("join of reference points gives the coordinate lines") {
  CHECK(join(bary(1, 0, 0), bary(0, 1, 0)) == ProjLine(Int(0), Int(0), Int(1)));
  CHECK(join(bary(1, 0, 0), bary(0, 0, 1)) == ProjLine(Int(0), Int(1), Int(0)));
  CHECK(error_of([] { join(bary(1, 0, 0), bary(2, 0, 0)); }) == ErrorCode::EqualPoints);
}

TEST_CASE("meet is dual to join") {
  CHECK(meet(ProjLine(Int(0), Int(0), Int(1)), ProjLine(Int(0), Int(1), Int(0))) == bary(1, 0, 0));
  CHECK(error_of([] { meet(ProjLine(Int(1), Int(2), Int(3)), ProjLine(Int(2), Int(4), Int(6))); }) ==
        ErrorCode::EqualLines);

  // y = 1 and y = 2 in the affine chart meet on [0:0:1].
  const ProjLine l = join(affine_point(q(0), q(1)), affine_point(q(5), q(1)));
  const ProjLine m = join(affine_point(q(0), q(2)), affine_point(q(-3), q(2)));
  const ProjPoint x = meet(l, m);
  CHECK(is_infinite(x, cartesian_infinity()));
  CHECK(parallel(l, m, cartesian_infinity()));
}

TEST_CASE("canonical form") {
  const ProjPoint p(Int(-4), Int(6), Int(0));
  CHECK(p == bary(2, -3, 0));
  CHECK(p.str() == "(2:-3:0)");
  CHECK(ProjPoint(p.coords()) == p);
  CHECK(error_of([] { ProjPoint(Int(0), Int(0), Int(0)); }) == ErrorCode::ZeroVector);
  CHECK(ProjPoint::from_rationals(q(1, 2), q(-1, 3), q(0)) == bary(3, -2, 0));
}

TEST_CASE("cross ratio values") {
  CHECK(cross_ratio(xaxis(0), xaxis(2), xaxis(1), xaxis(3)) == ExtRat(q(-1, 3)));
  CHECK(cross_ratio(xaxis(0), xaxis(2), xaxis(1), kXInfinity) == ExtRat(q(-1)));
  CHECK(cross_ratio(xaxis(0), xaxis(2), xaxis(5), xaxis(5)) == ExtRat(q(1)));
  CHECK(error_of([] { cross_ratio(xaxis(0), xaxis(2), xaxis(1), affine_point(q(1), q(1))); }) ==
        ErrorCode::NotCollinear);
}

TEST_CASE("harmonic conjugates") {
  CHECK(harmonic_conjugate(xaxis(0), xaxis(4), xaxis(2)) == kXInfinity);
  CHECK(harmonic_conjugate(xaxis(0), xaxis(4), kXInfinity) == xaxis(2));
  CHECK(harmonic_conjugate(xaxis(0), xaxis(4), harmonic_conjugate(xaxis(0), xaxis(4), xaxis(1))) == xaxis(1));
  CHECK(error_of([] { harmonic_conjugate(xaxis(0), xaxis(4), affine_point(q(1), q(1))); }) ==
        ErrorCode::NotCollinear);
}

TEST_CASE("midpoints") {
  const ProjLine& inf = cartesian_infinity();
  CHECK(midpoint(xaxis(0), xaxis(4), inf) == xaxis(2));
  CHECK(midpoint(xaxis(0), xaxis(0), inf) == xaxis(0));
  CHECK(midpoint(affine_point(q(1, 3), q(2)), affine_point(q(5, 3), q(4)), inf) == affine_point(q(1), q(3)));
  CHECK(error_of([&] { midpoint(xaxis(0), kXInfinity, inf); }) == ErrorCode::InfiniteArgument);
  // In barycentrics the midpoint of B and C is (0:1:1).
  CHECK(midpoint(bary(0, 1, 0), bary(0, 0, 1), barycentric_infinity()) == bary(0, 1, 1));
}

TEST_CASE("property: join and meet are dual") {
  Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    const ProjPoint p = gen.point(), a = gen.point(), b = gen.point();
    if (collinear(p, a, b) || p == a || p == b || a == b) continue;
    CHECK(meet(join(p, a), join(p, b)) == p);
    CHECK(on(p, join(p, a)));
  }
}

TEST_CASE("property: equality agrees with proportionality") {
  Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 u{Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9))};
    const Vec3 v{Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9))};
    if (is_zero(u) || is_zero(v)) continue;
    const ProjPoint a(u), b(v);
    CHECK((a == b) == is_zero(cross(u, v)));
    CHECK(ProjPoint(a.coords()) == a);
  }
}

TEST_CASE("property: cross ratio is invariant under collineations") {
  Gen gen(13);
  int tested = 0;
  while (tested < 200) {
    const ProjPoint a = gen.point(), b = gen.point();
    if (a == b) continue;
    const ProjPoint c = ProjPoint::from_rationals(gen.rational() * a[0] + b[0], gen.rational() * a[1] + b[1],
                                                  gen.rational() * a[2] + b[2]);
    const ProjPoint d = ProjPoint::from_rationals(gen.rational() * a[0] - b[0], gen.rational() * a[1] - b[1],
                                                  gen.rational() * a[2] - b[2]);
    const auto before = error_of([&] { cross_ratio(a, b, c, d); });
    if (before) continue;
    const ProjMap t(gen.invertible());
    CHECK(cross_ratio(t(a), t(b), t(c), t(d)) == cross_ratio(a, b, c, d));
    ++tested;
  }
}

TEST_CASE("property: harmonic conjugation is an involution") {
  Gen gen(14);
  int tested = 0;
  while (tested < 200) {
    const ProjPoint a = gen.point(), b = gen.point();
    if (a == b) continue;
    const Rat s = gen.rational();
    const ProjPoint c = ProjPoint::from_rationals(s * a[0] + b[0], s * a[1] + b[1], s * a[2] + b[2]);
    if (c == a || c == b) continue;
    const ProjPoint d = harmonic_conjugate(a, b, c);
    CHECK(collinear(a, b, d));
    CHECK(harmonic_conjugate(a, b, d) == c);
    CHECK(cross_ratio(a, b, c, d) == ExtRat(q(-1)));
    ++tested;
  }
}
