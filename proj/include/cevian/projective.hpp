#pragma once

// Homogeneous points and lines of the real projective plane with exact
// rational coordinates. Both are stored in canonical integer form, so
// structural equality is projective equality.

#include <optional>
#include <ostream>
#include <string>

#include "cevian/linalg.hpp"

namespace cevian {

template <class Tag>
class Homogeneous {
 public:
  /// Throws GeometryError(ZeroVector) for (0, 0, 0).
  Homogeneous(Int x, Int y, Int z);
  explicit Homogeneous(Vec3 v);

  static Homogeneous from_rationals(const Rat& x, const Rat& y, const Rat& z) {
    return Homogeneous(integerize(x, y, z));
  }

  const Int& operator[](std::size_t i) const { return v_[i]; }
  const Vec3& coords() const { return v_; }

  std::string str() const;

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.v_ == b.v_; }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) { return a.v_ < b.v_; }

 private:
  Vec3 v_;
};

struct PointTag {};
struct LineTag {};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<LineTag>;

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

/// Line at infinity for barycentric coordinates, [1:1:1].
const ProjLine& barycentric_infinity();
/// Line at infinity for affine coordinates (x:y:1), [0:0:1].
const ProjLine& cartesian_infinity();

/// Cartesian point (x, y) as (x:y:1).
ProjPoint affine_point(const Rat& x, const Rat& y);

/// A cross-ratio value: a rational or the point at infinity of the line.
class ExtRat {
 public:
  ExtRat(Rat value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::bad_optional_access for INFINITY.
  const Rat& value() const { return value_.value(); }
  std::string str() const { return value_ ? to_string(*value_) : "inf"; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) { return a.value_ == b.value_; }

 private:
  ExtRat() = default;
  std::optional<Rat> value_;
};

Int incidence(const ProjPoint& p, const ProjLine& l);
bool on(const ProjPoint& p, const ProjLine& l);
bool is_infinite(const ProjPoint& p, const ProjLine& infinity);

/// Throws EqualPoints when p == q.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
/// Throws EqualLines when l == m.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

/// Point at infinity of l (its direction).
ProjPoint direction(const ProjLine& l, const ProjLine& infinity);
/// Line through p in the given direction (p may equal the direction only if p is infinite).
ProjLine parallel_through(const ProjPoint& p, const ProjPoint& dir);
bool parallel(const ProjLine& l, const ProjLine& m, const ProjLine& infinity);

/// (a, b; c, d) = (ac/cb) / (ad/db). Throws NotCollinear, DegenerateQuadruple.
ExtRat cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

/// The d with (a, b; c, d) = -1. Throws NotCollinear, CoincidentArgument.
ProjPoint harmonic_conjugate(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Affine midpoint relative to the given line at infinity. Throws InfiniteArgument.
ProjPoint midpoint(const ProjPoint& p, const ProjPoint& q, const ProjLine& infinity);

/// Affine combination sum w_i * p_i with p_i scaled to unit weight on the
/// given line at infinity (weights need not sum to one; the result is
/// projective). Throws InfiniteArgument.
ProjPoint affine_combination(const ProjPoint& p, const Rat& wp, const ProjPoint& q, const Rat& wq,
                             const ProjLine& infinity);

namespace detail {
// Signed bracket [p, q] of two points on line l, up to a factor that
// depends only on l.
Int bracket(const ProjPoint& p, const ProjPoint& q, const ProjLine& l);
// Index of a nonzero coordinate of v.
int nonzero_index(const Vec3& v);
}  // namespace detail

}  // namespace cevian
