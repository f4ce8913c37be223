#pragma once

// Shared helpers for the unit tests: error-code capture, small random
// generators, and classical Cartesian oracles that never touch the kernel.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cevian/construction.hpp"
#include "cevian/error.hpp"
#include "cevian/random.hpp"

namespace testing {

using cevian::ErrorCode;
using cevian::Int;
using cevian::ProjPoint;
using cevian::Rat;

/// The code of the GeometryError thrown by f, or nullopt when f returns.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const cevian::GeometryError& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Rat q(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Hand-rolled generators on top of the library PRNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return rng_.uniform(lo, hi); }
  Rat rational(std::int64_t bound = 12) { return rng_.rational(bound); }

  ProjPoint point(std::int64_t bound = 12) {
    for (;;) {
      cevian::Vec3 v{Int(integer(-bound, bound)), Int(integer(-bound, bound)), Int(integer(-bound, bound))};
      if (!cevian::is_zero(v)) return ProjPoint(v);
    }
  }

  cevian::ProjLine line(std::int64_t bound = 12) {
    for (;;) {
      cevian::Vec3 v{Int(integer(-bound, bound)), Int(integer(-bound, bound)), Int(integer(-bound, bound))};
      if (!cevian::is_zero(v)) return cevian::ProjLine(v);
    }
  }

  cevian::Mat3 invertible(std::int64_t bound = 6) {
    for (;;) {
      cevian::Mat3 m;
      for (auto& row : m)
        for (auto& x : row) x = integer(-bound, bound);
      if (cevian::det(m) != 0) return m;
    }
  }

  /// Ordinary barycentric point with every coordinate nonzero.
  ProjPoint generic(std::int64_t bound = 12) {
    for (;;) {
      const ProjPoint p = point(bound);
      if (p[0] != 0 && p[1] != 0 && p[2] != 0 && p[0] + p[1] + p[2] != 0) return p;
    }
  }

 private:
  cevian::SplitMix64 rng_;
};

// ---------------------------------------------------------------------------
// Classical oracles in plain Cartesian arithmetic.

struct Pt {
  Rat x;
  Rat y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator*(const Rat& k, const Pt& a) { return {k * a.x, k * a.y}; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dist2(const Pt& a, const Pt& b) { return dot(a - b, a - b); }

/// Solves a1 x + b1 y = c1, a2 x + b2 y = c2 by Cramer's rule.
inline Pt solve2(const Rat& a1, const Rat& b1, const Rat& c1, const Rat& a2, const Rat& b2, const Rat& c2) {
  const Rat d = a1 * b2 - a2 * b1;
  return {(c1 * b2 - c2 * b1) / d, (a1 * c2 - a2 * c1) / d};
}

/// Normalized barycentrics of p by signed areas.
inline std::array<Rat, 3> barycentric(const Pt& a, const Pt& b, const Pt& c, const Pt& p) {
  const Rat area = cross(b - a, c - a);
  return {cross(b - p, c - p) / area, cross(c - p, a - p) / area, cross(a - p, b - p) / area};
}

inline Pt from_barycentric(const Pt& a, const Pt& b, const Pt& c, const std::array<Rat, 3>& w) {
  const Rat s = w[0] + w[1] + w[2];
  return (w[0] / s) * a + (w[1] / s) * b + (w[2] / s) * c;
}

/// Orthocenter: intersection of the altitudes from A and B.
inline Pt orthocenter(const Pt& a, const Pt& b, const Pt& c) {
  const Pt bc = c - b, ca = a - c;
  return solve2(bc.x, bc.y, dot(bc, a), ca.x, ca.y, dot(ca, b));
}

/// Circumcenter: intersection of two perpendicular bisectors.
inline Pt circumcenter(const Pt& a, const Pt& b, const Pt& c) {
  const Pt ab = b - a, ac = c - a;
  return solve2(2 * ab.x, 2 * ab.y, dot(b, b) - dot(a, a), 2 * ac.x, 2 * ac.y, dot(c, c) - dot(a, a));
}

/// Foot of the perpendicular from p to line uv.
inline Pt perpendicular_foot(const Pt& u, const Pt& v, const Pt& p) {
  const Pt d = v - u;
  return u + (dot(p - u, d) / dot(d, d)) * d;
}

/// Circle x^2 + y^2 + D x + E y + F = 0 through three points, as (D, E, F).
inline std::array<Rat, 3> circle_through(const Pt& a, const Pt& b, const Pt& c) {
  const Pt o = circumcenter(a, b, c);
  const Rat d = -2 * o.x, e = -2 * o.y;
  return {d, e, -(dot(a, a) + d * a.x + e * a.y)};
}

inline bool on_circle(const std::array<Rat, 3>& def, const Pt& p) {
  return dot(p, p) + def[0] * p.x + def[1] * p.y + def[2] == 0;
}

/// Triangle with integer side lengths, which the classical incircle formulas need.
struct IntegerTriangle {
  Pt a, b, c;
  Rat la, lb, lc;  // |BC|, |CA|, |AB|

  Rat s() const { return (la + lb + lc) / 2; }
  Pt incenter() const { return from_barycentric(a, b, c, {la, lb, lc}); }
  /// r = area / s = |cross| / perimeter.
  Rat inradius() const { return abs(cross(b - a, c - a)) / (la + lb + lc); }
  /// Contact points divide the sides as s - side.
  std::array<Rat, 3> gergonne() const { return {1 / (s() - la), 1 / (s() - lb), 1 / (s() - lc)}; }
  Pt gergonne_point() const { return from_barycentric(a, b, c, gergonne()); }
};

inline IntegerTriangle right_345() { return {{q(0), q(0)}, {q(4), q(0)}, {q(0), q(3)}, q(5), q(3), q(4)}; }
inline IntegerTriangle scalene_131415() { return {{q(0), q(0)}, {q(14), q(0)}, {q(5), q(12)}, q(15), q(13), q(14)}; }

inline cevian::CartesianPoint cp(const Pt& p) { return {p.x, p.y}; }
inline Pt pt(const cevian::CartesianPoint& p) { return {p.x, p.y}; }

inline cevian::TriangleFrame frame_of(const IntegerTriangle& t) { return cevian::TriangleFrame(cp(t.a), cp(t.b), cp(t.c)); }

inline ProjPoint bary(long x, long y, long z) { return ProjPoint(Int(x), Int(y), Int(z)); }

inline ProjPoint bary(const std::array<Rat, 3>& w) { return ProjPoint(cevian::integerize(w[0], w[1], w[2])); }

}  // namespace testing
