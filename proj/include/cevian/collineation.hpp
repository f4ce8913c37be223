#pragma once

// Projective collineations as 3x3 matrices up to scale, the affine maps the
// cevian constructions are built from, and pole-form reciprocal conjugations.

#include <array>

#include "cevian/projective.hpp"

namespace cevian {

class ProjMap {
 public:
  /// Throws NotInvertible for a singular matrix.
  explicit ProjMap(Mat3 m);
  static ProjMap identity() { return ProjMap(identity3()); }

  const Mat3& matrix() const { return m_; }

  ProjPoint operator()(const ProjPoint& p) const;
  /// Lines transform by the inverse transpose.
  ProjLine operator()(const ProjLine& l) const;

  ProjMap inverse() const;
  /// Fixes the given line at infinity setwise.
  bool is_affine(const ProjLine& infinity) const;
  bool is_identity() const { return m_ == identity3(); }

  /// Composition: (f * g)(x) = f(g(x)).
  friend ProjMap operator*(const ProjMap& f, const ProjMap& g) { return ProjMap(multiply(f.m_, g.m_)); }
  friend bool operator==(const ProjMap& a, const ProjMap& b) { return a.m_ == b.m_; }

  std::string str() const;

 private:
  Mat3 m_;
};

using PointTriple = std::array<ProjPoint, 3>;
using PointQuad = std::array<ProjPoint, 4>;

/// Unique affine map with src[i] -> dst[i]. Throws CollinearInput, InfiniteInput.
ProjMap affine_from_triangles(const PointTriple& src, const PointTriple& dst, const ProjLine& infinity);

/// Unique collineation with src[i] -> dst[i]. Throws DegeneratePosition.
ProjMap map_from_four_points(const PointQuad& src, const PointQuad& dst);

/// Affine reflection fixing `axis` pointwise and reversing segments parallel
/// to `dir`, whose midpoints lie on the axis. Throws NotADirection,
/// DirectionOnAxis.
ProjMap affine_reflection(const ProjLine& axis, const ProjPoint& dir, const ProjLine& infinity);

/// Point reflection (half-turn) about an ordinary point.
ProjMap half_turn(const ProjPoint& center, const ProjLine& infinity);

/// Isolated ordinary fixed point of an affine map. Throws NotAffine,
/// TranslationNoFixedPoint, NonIsolatedFixedPoints.
ProjPoint fixed_point(const ProjMap& m, const ProjLine& infinity);

/// Complement map of the reference triangle in barycentrics.
const ProjMap& complement_map();
/// Its inverse, the anticomplement map.
const ProjMap& anticomplement_map();

/// Reciprocal conjugation (r:s:t) -> (l/r : m/s : n/t) with pole (l:m:n).
class QuadMap {
 public:
  /// Throws OnSideLine when the pole has a zero coordinate.
  explicit QuadMap(ProjPoint pole);

  const ProjPoint& pole() const { return pole_; }
  /// Throws OnSideLine when x has a zero coordinate.
  ProjPoint operator()(const ProjPoint& x) const;

 private:
  ProjPoint pole_;
};

ProjPoint reciprocal_conjugate(const ProjPoint& pole, const ProjPoint& x);
/// Isotomic conjugate, the reciprocal conjugation with pole (1:1:1).
ProjPoint isotomic(const ProjPoint& x);

}  // namespace cevian
