#pragma once

// Conics as symmetric 3x3 matrices up to scale. Everything a construction
// needs stays linear in the six coefficients, so results remain rational.

#include <array>
#include <vector>

#include "cevian/collineation.hpp"

namespace cevian {

/// One homogeneous linear condition on (c_xx, c_yy, c_zz, c_yz, c_zx, c_xy),
/// where the quadratic form is c_xx x^2 + ... + 2 c_yz yz + 2 c_zx zx + 2 c_xy xy.
using ConicRow = std::array<Rat, 6>;

class Conic {
 public:
  /// Throws DegenerateInput for a non-symmetric or zero matrix.
  explicit Conic(Mat3 m);
  static Conic from_coefficients(const std::vector<Int>& c);

  const Mat3& matrix() const { return m_; }
  Int evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return evaluate(p) == 0; }
  bool is_degenerate() const { return det(m_) == 0; }

  // Polarity; all of these throw DegenerateConic on a singular matrix.
  ProjLine polar(const ProjPoint& p) const;
  ProjPoint pole(const ProjLine& l) const;
  ProjPoint center(const ProjLine& infinity) const;
  /// Throws KnownNotIncident when p is not on the conic.
  ProjLine tangent_at(const ProjPoint& p) const;
  bool is_tangent(const ProjLine& l) const;

  /// Image under t: t^-T C t^-1.
  Conic transformed(const ProjMap& t) const;

  friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }
  std::string str() const;

 private:
  Mat3 m_;
};

ConicRow incidence_condition(const ProjPoint& p);
/// Two independent rows (three written) forcing the polar of p to be l.
std::vector<ConicRow> tangency_conditions(const ProjPoint& p, const ProjLine& l);
/// Rows forcing the polar of `center` to be the line at infinity.
std::vector<ConicRow> center_conditions(const ProjPoint& center, const ProjLine& infinity);

/// Nullspace of the conditions as a conic. Throws Overconstrained (no
/// solution) or RankDeficient (more than a one-dimensional family).
Conic conic_from_conditions(const std::vector<ConicRow>& conditions);

/// Throws FourCollinear, UnderDetermined.
Conic conic_through_five(const std::array<ProjPoint, 5>& pts);

/// Circumconic of a, b, c with prescribed center.
Conic circumconic_with_center(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                              const ProjPoint& center, const ProjLine& infinity);

/// Conic through the nine midpoint/diagonal points of the quadrangle.
/// Throws DegenerateQuadrangle, InfiniteArgument.
Conic nine_point_conic(const std::array<ProjPoint, 4>& quad, const ProjLine& infinity);

/// Second point of l on c besides `known`; `known` again when l is tangent.
/// Throws KnownNotIncident, DegenerateConic (l lies on c).
ProjPoint second_intersection(const Conic& c, const ProjLine& l, const ProjPoint& known);

/// Two reference points of a line used as its parameter chart: the first two
/// distinct meets of l with x = 0, y = 0, z = 0.
std::array<ProjPoint, 2> line_chart(const ProjLine& l);

/// Projective involution of a line, stored as a 2x2 matrix acting on
/// parameters (s, t) for s*b0 + t*b1 in the line's chart.
class LineInvolution {
 public:
  /// Throws DegenerateInput unless the action is a genuine involution.
  LineInvolution(ProjLine base, std::array<Int, 4> action);

  const ProjLine& base_line() const { return base_; }
  const std::array<ProjPoint, 2>& chart() const { return chart_; }
  const std::array<Int, 4>& action() const { return action_; }

  /// Throws NotCollinear for a point off the base line.
  ProjPoint operator()(const ProjPoint& p) const;

 private:
  ProjLine base_;
  std::array<ProjPoint, 2> chart_;
  std::array<Int, 4> action_;  // row major, canonical up to scale
};

/// Conjugate-point involution of c on l. Throws TangentLine, DegenerateConic.
LineInvolution induced_involution(const Conic& c, const ProjLine& l);

/// Throws DifferentBaseLines.
bool involutions_equal(const LineInvolution& a, const LineInvolution& b);

/// The unique conic through a, b, c whose polarity induces psi on the line
/// at infinity. Throws DegenerateInput.
Conic conic_with_involution_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                                    const LineInvolution& psi, const ProjLine& infinity);

}  // namespace cevian
