#pragma once

// The derived-object graph of a triangle ABC and a point P: cevian and
// anticevian triangles, the generalized orthocenter H and circumcenter O,
// the maps K, T_P, T_P', M, the inconic and circumconics, and the
// generalized isogonal map gamma_P built on top of them.
//
// Internal coordinates are barycentric with respect to ABC, so
// A = (1:0:0), B = (0:1:0), C = (0:0:1) and the line at infinity is [1:1:1].

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cevian/conic.hpp"

namespace cevian {

struct CartesianPoint {
  Rat x;
  Rat y;
  friend bool operator==(const CartesianPoint&, const CartesianPoint&) = default;
};

/// The Cartesian triangle behind a barycentric frame.
class TriangleFrame {
 public:
  /// Throws CollinearInput.
  TriangleFrame(CartesianPoint a, CartesianPoint b, CartesianPoint c);

  const std::array<CartesianPoint, 3>& vertices() const { return vertices_; }
  /// |BC|^2, |CA|^2, |AB|^2.
  const std::array<Rat, 3>& squared_sides() const { return squared_sides_; }

  ProjPoint to_barycentric(const CartesianPoint& p) const;
  /// Homogeneous Cartesian (x:y:1 for ordinary points) to barycentric.
  ProjPoint to_barycentric(const ProjPoint& cartesian) const;
  ProjPoint to_cartesian(const ProjPoint& barycentric) const;
  /// nullopt for points at infinity.
  std::optional<CartesianPoint> cartesian(const ProjPoint& barycentric) const;
  Conic to_cartesian(const Conic& barycentric) const;
  Conic to_barycentric(const Conic& cartesian) const;

 private:
  std::array<CartesianPoint, 3> vertices_;
  std::array<Rat, 3> squared_sides_;
  ProjMap to_cartesian_;
  ProjMap to_barycentric_;
};

/// A Euclidean-free triangle of projective points.
class Triangle {
 public:
  /// Throws DegenerateInput for collinear (or coincident) vertices.
  Triangle(ProjPoint a, ProjPoint b, ProjPoint c);

  const ProjPoint& operator[](std::size_t i) const { return v_[i]; }
  const std::array<ProjPoint, 3>& vertices() const { return v_; }
  Triangle mapped(const ProjMap& m) const { return Triangle(m(v_[0]), m(v_[1]), m(v_[2])); }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<ProjPoint, 3> v_;
};

/// Each guard is an exact predicate for one of the hypotheses used by the
/// constructions and theorems.
enum class Guard {
  OnSide,
  OnAnticomplementarySide,
  OnMedian,
  OnSteinerCircumellipse,
  AtInfinity,
  HIsVertex,
  PEqualsG,
};

inline constexpr std::array<Guard, 7> kAllGuards{Guard::OnSide,   Guard::OnAnticomplementarySide,
                                                 Guard::OnMedian, Guard::OnSteinerCircumellipse,
                                                 Guard::AtInfinity, Guard::HIsVertex,
                                                 Guard::PEqualsG};

std::string_view guard_name(Guard g);

/// Requires flag(guard) == holds.
struct Requirement {
  Guard guard;
  bool holds;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Names such as "off_sides", "on_median", "ordinary", "H_not_vertex".
std::string requirement_name(const Requirement& r);
/// Throws GeometryError(ParseError) for an unknown name.
Requirement parse_requirement(std::string_view name);

/// Why an object is unavailable for this configuration.
struct Blocked {
  std::string reason;
};

using DerivedObject = std::variant<ProjPoint, ProjMap, Conic, LineInvolution, Blocked>;

class CevianConfig {
 public:
  /// Throws VertexInput when P is a vertex. Guards never throw here; a
  /// blocked object throws GuardViolation when requested.
  static CevianConfig derive(const TriangleFrame& frame, const ProjPoint& p_barycentric);
  static CevianConfig derive(const TriangleFrame& frame, const CartesianPoint& p);

  const TriangleFrame& frame() const { return frame_; }
  const ProjLine& infinity() const { return barycentric_infinity(); }

  bool flag(Guard g) const { return flags_.at(static_cast<std::size_t>(g)); }
  bool satisfies(const Requirement& r) const { return flag(r.guard) == r.holds; }
  std::optional<Requirement> first_unmet(const std::vector<Requirement>& rs) const;

  bool available(std::string_view name) const;
  const ProjPoint& point(std::string_view name) const;
  const ProjMap& map(std::string_view name) const;
  const Conic& conic(std::string_view name) const;
  const LineInvolution& involution(std::string_view name) const;
  const std::map<std::string, DerivedObject, std::less<>>& objects() const { return objects_; }

  const ProjPoint& A() const { return point("A"); }
  const ProjPoint& B() const { return point("B"); }
  const ProjPoint& C() const { return point("C"); }
  const ProjPoint& G() const { return point("G"); }
  const ProjPoint& P() const { return point("P"); }
  const ProjPoint& Q() const { return point("Q"); }
  const ProjPoint& H() const { return point("H"); }
  const ProjPoint& O() const { return point("O"); }
  Triangle reference() const { return Triangle(A(), B(), C()); }

  /// Classical isogonal conjugate, pole (a^2 : b^2 : c^2).
  ProjPoint isogonal(const ProjPoint& x) const;

  /// Copy with one stored point moved by a Cartesian offset. Nothing else is
  /// recomputed; used to build falsification fixtures.
  CevianConfig perturbed(std::string_view name, const Rat& dx, const Rat& dy) const;

 private:
  CevianConfig(TriangleFrame frame) : frame_(std::move(frame)) {}

  template <class T>
  const T& get(std::string_view name) const;
  void put(std::string name, DerivedObject obj) { objects_.insert_or_assign(std::move(name), std::move(obj)); }
  void block(std::initializer_list<const char*> names, const std::string& reason);

  TriangleFrame frame_;
  std::array<bool, kAllGuards.size()> flags_{};
  std::map<std::string, DerivedObject, std::less<>> objects_;
};

/// Cevian triangle of a barycentric point (traces on BC, CA, AB).
Triangle cevian_triangle(const ProjPoint& p);

/// Generalized isogonal map via the three affine reflections.
/// Throws VertexInput, GuardViolation, InternalInconsistency.
ProjPoint gamma_P(const CevianConfig& cfg, const ProjPoint& x);
/// Same map through its reciprocal-conjugation pole Q^2. Throws OnSideLine.
ProjPoint gamma_P_pole(const CevianConfig& cfg, const ProjPoint& x);
/// Intersection of A pi_A(AX.BC), B pi_B(BX.CA), C pi_C(CX.AB) for the
/// involutions pi_A(D*) = A T(D*) . BC of an affine map T: ABC -> cevian triangle.
ProjPoint delta_via(const ProjMap& t, const ProjPoint& x);
ProjPoint delta_P(const CevianConfig& cfg, const ProjPoint& x);
ProjPoint delta_H(const CevianConfig& cfg, const ProjPoint& x);

/// Feet on BC, CA, AB of the parallels through r to QD, QE, QF.
using PedalFeet = std::array<ProjPoint, 3>;
/// Throws InfinitePoint, GuardViolation.
PedalFeet pedal_triangle(const CevianConfig& cfg, const ProjPoint& r);

struct PedalConic {
  ProjPoint r1;
  ProjPoint r2;
  PedalFeet feet1;
  PedalFeet feet2;
  Conic conic;
};
/// Throws FixedPointInput, InfinitePoint, InfiniteConjugate, UnderDetermined,
/// InternalInconsistency (the six feet are not on a conic).
PedalConic pedal_conic(const CevianConfig& cfg, const ProjPoint& r1);

/// Throws VertexInput, DegenerateInput.
Triangle circumcevian_triangle(const Conic& c, const Triangle& base, const ProjPoint& r);
/// Vertex i is the meet of the tangents at the other two base vertices.
/// Throws DegenerateConic, KnownNotIncident.
Triangle tangential_triangle(const Conic& c, const Triangle& base);
/// Common point of the joins t1[i] t2[i]. Throws NotPerspective, EqualPoints.
ProjPoint perspector(const Triangle& t1, const Triangle& t2);

/// TCC-perspector of an arbitrary point y through the closed formula
/// gamma K^-1 T_R^-1 K gamma(y), R = K^-1(gamma(y)).
ProjPoint tcc_perspector_formula(const CevianConfig& cfg, const ProjPoint& y);
/// Same point as the perspector of the tangential triangle and the
/// circumcevian triangle of y, both for the circumcircle.
ProjPoint tcc_perspector_synthetic(const CevianConfig& cfg, const ProjPoint& y);
/// TCC-perspector of gamma(Q) by the formula. Throws GuardViolation.
ProjPoint tcc_perspector(const CevianConfig& cfg);

/// Line of the feet of r1 on the circumconic. Throws NotOnCircumconic.
ProjLine simson_line(const CevianConfig& cfg, const ProjPoint& r1);

}  // namespace cevian
