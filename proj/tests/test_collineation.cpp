#include "doctest.h"

#include "cevian/collineation.hpp"
#include "cevian/theorems.hpp"
#include "support.hpp"

using namespace cevian;
using testing::bary;
using testing::error_of;
using testing::Gen;
using testing::q;

namespace {

const ProjPoint A = bary(1, 0, 0), B = bary(0, 1, 0), C = bary(0, 0, 1);
const ProjLine& binf() { return barycentric_infinity(); }
const ProjLine& cinf() { return cartesian_infinity(); }

std::vector<CevianConfig> sampled(std::uint64_t seed, int count, const std::vector<std::string>& names) {
  std::vector<Requirement> req;
  for (const auto& n : names) req.push_back(parse_requirement(n));
  ConfigSampler sampler(seed);
  std::vector<CevianConfig> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.sample(i, req));
  return out;
}

}  // namespace

TEST_CASE("affine maps between triangles") {
  const PointTriple abc{A, B, C};
  CHECK(affine_from_triangles(abc, {bary(0, 1, 1), bary(1, 0, 1), bary(1, 1, 0)}, binf()) == complement_map());
  CHECK(affine_from_triangles(abc, abc, binf()).is_identity());
  const Triangle medial = cevian_triangle(bary(1, 1, 1));
  CHECK(affine_from_triangles(abc, medial.vertices(), binf()) == complement_map());
  CHECK(complement_map() * anticomplement_map() == ProjMap::identity());
  CHECK(error_of([&] { affine_from_triangles(abc, {A, B, bary(1, 1, 0)}, binf()); }) == ErrorCode::CollinearInput);
  CHECK(error_of([&] { affine_from_triangles(abc, {A, B, bary(1, -1, 0)}, binf()); }) == ErrorCode::InfiniteInput);
}

TEST_CASE("property: affine_from_triangles is affine and hits its targets") {
  Gen gen(21);
  for (int i = 0; i < 100; ++i) {
    PointTriple src{gen.generic(), gen.generic(), gen.generic()};
    PointTriple dst{gen.generic(), gen.generic(), gen.generic()};
    if (collinear(src[0], src[1], src[2]) || collinear(dst[0], dst[1], dst[2])) continue;
    const ProjMap t = affine_from_triangles(src, dst, binf());
    CHECK(t.is_affine(binf()));
    for (int k = 0; k < 3; ++k) CHECK(t(src[k]) == dst[k]);
  }
}

TEST_CASE("collineation from four points") {
  const PointQuad simplex{A, B, C, bary(1, 1, 1)};
  CHECK(map_from_four_points(simplex, simplex).is_identity());
  CHECK(error_of([&] { map_from_four_points({A, B, bary(1, 1, 0), bary(1, 2, 3)}, simplex); }) ==
        ErrorCode::DegeneratePosition);

  Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const ProjMap known(gen.invertible());
    const PointQuad src{gen.point(), gen.point(), gen.point(), gen.point()};
    if (error_of([&] { map_from_four_points(src, src); })) continue;
    const PointQuad dst{known(src[0]), known(src[1]), known(src[2]), known(src[3])};
    const ProjMap t = map_from_four_points(src, dst);
    CHECK(t == known);
    const ProjPoint fifth = gen.point();
    CHECK(t(fifth) == known(fifth));
  }
}

TEST_CASE("affine reflections") {
  const ProjLine x_axis = join(affine_point(q(0), q(0)), affine_point(q(1), q(0)));
  const ProjPoint vertical(Int(0), Int(1), Int(0));
  const ProjMap r = affine_reflection(x_axis, vertical, cinf());
  CHECK(r(affine_point(q(1), q(2))) == affine_point(q(1), q(-2)));
  CHECK(r(affine_point(q(7, 3), q(0))) == affine_point(q(7, 3), q(0)));
  CHECK(r * r == ProjMap::identity());
  CHECK(error_of([&] { affine_reflection(x_axis, ProjPoint(Int(1), Int(0), Int(0)), cinf()); }) ==
        ErrorCode::DirectionOnAxis);
  CHECK(error_of([&] { affine_reflection(x_axis, affine_point(q(0), q(1)), cinf()); }) == ErrorCode::NotADirection);

  // An oblique direction: segments along (1,1) are halved by the x-axis.
  const ProjMap s = affine_reflection(x_axis, ProjPoint(Int(1), Int(1), Int(0)), cinf());
  CHECK(s(affine_point(q(0), q(1))) == affine_point(q(-2), q(-1)));

  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const ProjLine axis = gen.line();
    if (axis == cinf()) continue;
    const ProjPoint dir(Int(gen.integer(-5, 5)), Int(gen.integer(1, 5)), Int(0));
    if (on(dir, axis)) continue;
    const ProjMap h = affine_reflection(axis, dir, cinf());
    CHECK(h * h == ProjMap::identity());
    CHECK(h.is_affine(cinf()));
    const ProjPoint p = affine_point(gen.rational(), gen.rational());
    if (!on(p, axis)) CHECK(on(midpoint(p, h(p), cinf()), axis));
  }
}

TEST_CASE("fixed points of affine maps") {
  // Homothety about (1,2) with ratio 3: x -> 3x - 2, y -> 3y - 4.
  const ProjMap homothety(Mat3{Vec3{3, 0, -2}, Vec3{0, 3, -4}, Vec3{0, 0, 1}});
  CHECK(fixed_point(homothety, cinf()) == affine_point(q(1), q(2)));
  const ProjMap translation(Mat3{Vec3{1, 0, 5}, Vec3{0, 1, -1}, Vec3{0, 0, 1}});
  CHECK(error_of([&] { fixed_point(translation, cinf()); }) == ErrorCode::TranslationNoFixedPoint);
  CHECK(error_of([&] { fixed_point(ProjMap::identity(), cinf()); }) == ErrorCode::NonIsolatedFixedPoints);
  const ProjPoint o = affine_point(q(3, 7), q(-2, 5));
  CHECK(fixed_point(half_turn(o, cinf()), cinf()) == o);
  const ProjMap perspective(Mat3{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 0, 1}});
  CHECK(error_of([&] { fixed_point(perspective, cinf()); }) == ErrorCode::NotAffine);
}

TEST_CASE("reciprocal conjugation") {
  CHECK(reciprocal_conjugate(bary(1, 1, 1), bary(1, 2, 3)) == bary(6, 3, 2));
  CHECK(isotomic(bary(1, 2, 3)) == bary(6, 3, 2));
  CHECK(reciprocal_conjugate(bary(25, 64, 81), bary(1, 1, 1)) == bary(25, 64, 81));
  CHECK(error_of([] { QuadMap(bary(1, 0, 2)); }) == ErrorCode::OnSideLine);
  CHECK(error_of([] { isotomic(bary(1, 0, 2)); }) == ErrorCode::OnSideLine);

  // Isogonal conjugate of G on the 3-4-5 triangle: pole from the oracle's
  // squared side lengths.
  const auto t = testing::right_345();
  const ProjPoint pole = testing::bary({testing::dist2(t.b, t.c), testing::dist2(t.c, t.a), testing::dist2(t.a, t.b)});
  CHECK(pole == bary(25, 9, 16));
  CHECK(reciprocal_conjugate(pole, bary(1, 1, 1)) == bary(25, 9, 16));

  Gen gen(24);
  for (int i = 0; i < 200; ++i) {
    const ProjPoint p = gen.generic(), x = gen.generic();
    CHECK(reciprocal_conjugate(p, reciprocal_conjugate(p, x)) == x);
  }
}

TEST_CASE("property: complement midpoint and commuting maps on random configurations") {
  Gen gen(25);
  for (const CevianConfig& cfg : sampled(25, 15, {"off_sides", "off_anticomplementary"})) {
    const ProjMap& k = cfg.map("K");
    const ProjMap& tp = cfg.map("T_P");
    const ProjMap& tpp = cfg.map("T_P_prime");
    for (int i = 0; i < 20; ++i) {
      const ProjPoint r = gen.generic();
      CHECK(k(r) == midpoint(tp(r), tpp(r), binf()));
    }
    const ProjMap u = tp * cfg.map("K_inv"), v = tpp * cfg.map("K_inv");
    CHECK(u * v == v * u);
  }
}

TEST_CASE("property: affine reflections preserve the inconic; Q^2 conjugation fixes the anticevian vertices") {
  for (const CevianConfig& cfg : sampled(26, 15, {"off_sides", "off_anticomplementary"})) {
    const Conic& inconic = cfg.conic("inconic");
    for (const char* h : {"h_a", "h_b", "h_c"}) {
      CHECK(inconic.transformed(cfg.map(h)) == inconic);
      CHECK(cfg.map(h) * cfg.map(h) == ProjMap::identity());
    }
    const QuadMap gamma(cfg.point("Q2"));
    const ProjPoint& qq = cfg.Q();
    CHECK(cfg.point("Q2") == ProjPoint(qq[0] * qq[0], qq[1] * qq[1], qq[2] * qq[2]));
    CHECK(gamma(qq) == qq);
    // Anticevian vertices of Q = (r:s:t) are (-r:s:t), (r:-s:t), (r:s:-t).
    CHECK(gamma(ProjPoint(-qq[0], qq[1], qq[2])) == ProjPoint(-qq[0], qq[1], qq[2]));
    CHECK(gamma(ProjPoint(qq[0], -qq[1], qq[2])) == ProjPoint(qq[0], -qq[1], qq[2]));
    CHECK(gamma(ProjPoint(qq[0], qq[1], -qq[2])) == ProjPoint(qq[0], qq[1], -qq[2]));
  }
}
