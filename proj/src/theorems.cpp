#include "cevian/theorems.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <sstream>

#include "cevian/error.hpp"

namespace cevian {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

constexpr int kPointRetries = 1000;

[[noreturn]] void retry_exhausted(const char* what) {
  throw GeometryError(ErrorCode::RetryExhausted, std::string("could not sample ") + what);
}

bool is_vertex(const ProjPoint& x) {
  int zeros = 0;
  for (int i = 0; i < 3; ++i) zeros += x[i] == 0;
  return zeros == 2;
}

bool off_sides(const ProjPoint& x) { return x[0] != 0 && x[1] != 0 && x[2] != 0; }

std::string describe(const LineInvolution& psi) {
  std::ostringstream os;
  os << psi.base_line().str() << " [" << psi.action()[0] << ' ' << psi.action()[1] << "; " << psi.action()[2] << ' '
     << psi.action()[3] << ']';
  return os.str();
}

template <class T>
std::string describe(const T& x) {
  return x.str();
}

template <class T>
void expect_equal(const std::string& lhs_name, const T& lhs, const std::string& rhs_name, const T& rhs) {
  if (lhs == rhs) return;
  throw CheckFailure{{lhs_name + " == " + rhs_name, {{lhs_name, describe(lhs)}, {rhs_name, describe(rhs)}}}};
}

void expect_same_involution(const std::string& lhs_name, const LineInvolution& lhs, const std::string& rhs_name,
                            const LineInvolution& rhs) {
  if (involutions_equal(lhs, rhs)) return;
  throw CheckFailure{{lhs_name + " == " + rhs_name, {{lhs_name, describe(lhs)}, {rhs_name, describe(rhs)}}}};
}

void expect(bool holds, std::string equality, std::map<std::string, std::string> objects) {
  if (!holds) throw CheckFailure{{std::move(equality), std::move(objects)}};
}

void expect_on(const std::string& point_name, const ProjPoint& p, const std::string& conic_name, const Conic& c) {
  expect(c.contains(p), point_name + " on " + conic_name, {{point_name, p.str()}, {conic_name, c.str()}});
}

using Named = std::pair<std::string, ProjPoint>;

void expect_collinear(const std::vector<Named>& pts) {
  std::map<std::string, std::string> objects;
  std::string names;
  for (const auto& [n, p] : pts) {
    objects[n] = p.str();
    names += (names.empty() ? "" : ", ") + n;
  }
  const ProjPoint& first = pts.front().second;
  const auto other = std::find_if(pts.begin(), pts.end(), [&](const Named& x) { return !(x.second == first); });
  if (other == pts.end()) return;
  const ProjLine l = join(first, other->second);
  for (const auto& [n, p] : pts) expect(on(p, l), "collinear(" + names + ")", objects);
}

void expect_concurrent(const std::string& what, const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  expect(concurrent(a, b, c), what + " concurrent", {{"l1", a.str()}, {"l2", b.str()}, {"l3", c.str()}});
}

const DerivedObject& lookup(const CevianConfig& cfg, const std::string& name) { return cfg.objects().find(name)->second; }

void needs(const CevianConfig& cfg, const std::string& name) {
  if (const auto* b = std::get_if<Blocked>(&lookup(cfg, name))) throw CheckSkipped{name + ":" + b->reason};
}

const ProjPoint kA(1, 0, 0);
const ProjPoint kB(0, 1, 0);
const ProjPoint kC(0, 0, 1);
const ProjLine kBC(1, 0, 0);
const ProjLine kCA(0, 1, 0);
const ProjLine kAB(0, 0, 1);
const std::array<ProjPoint, 3> kVertices{kA, kB, kC};
const std::array<ProjLine, 3> kSides{kBC, kCA, kAB};

ProjPoint gamma(const CevianConfig& cfg, const ProjPoint& x) { return gamma_P(cfg, x); }

// Line through a vertex and its partner on a conic; the tangent when they
// coincide.
ProjLine chord_or_tangent(const Conic& c, const ProjPoint& v, const ProjPoint& w) {
  return v == w ? c.tangent_at(v) : join(v, w);
}

// Points s*b0 + t*b1 of a line for random (s, t).
ProjPoint random_point_of(CheckContext& ctx, const ProjLine& l) {
  const auto chart = line_chart(l);
  for (;;) {
    const Int s = ctx.rng().uniform(-ctx.bound(), ctx.bound());
    const Int t = ctx.rng().uniform(-ctx.bound(), ctx.bound());
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[i] = s * chart[0][i] + t * chart[1][i];
    if (!is_zero(v)) return ProjPoint(v);
  }
}

ProjPoint feet_line_meet(const CevianConfig& cfg, const std::array<ProjPoint, 3>& on_sides) {
  const ProjLine& inf = cfg.infinity();
  const ProjPoint& Q = cfg.Q();
  const char* touch[3] = {"D", "E", "F"};
  std::array<ProjLine, 3> lines{kBC, kBC, kBC};
  for (int i = 0; i < 3; ++i) lines[i] = join(on_sides[i], direction(join(Q, cfg.point(touch[i])), inf));
  expect_concurrent("parallels to QD, QE, QF through the second feet", lines[0], lines[1], lines[2]);
  return lines[0] == lines[1] ? meet(lines[0], lines[2]) : meet(lines[0], lines[1]);
}

// Inputs for which both TCC constructions are defined: R = K^-1(gamma(y))
// has a genuine cevian triangle, y is off the circumcircle, and the point
// the formula conjugates last is off the side lines.
bool tcc_input_ok(const CevianConfig& cfg, const ProjPoint& y) {
  const ProjPoint gy = cfg.isogonal(y);
  const ProjPoint R = anticomplement_map()(gy);
  const Int &p = R[0], &q = R[1], &r = R[2];
  if (p * q * r == 0 || (q + r) * (r + p) * (p + q) == 0 || cfg.conic("circumcircle").contains(y)) return false;
  const ProjMap t = affine_from_triangles({kA, kB, kC}, cevian_triangle(R).vertices(), cfg.infinity());
  return off_sides(anticomplement_map()(t.inverse()(complement_map()(gy))));
}

Requirement req(std::string_view name) { return parse_requirement(name); }

std::vector<Requirement> reqs(std::initializer_list<std::string_view> names) {
  std::vector<Requirement> out{req("off_sides"), req("off_anticomplementary")};
  for (const auto n : names) out.push_back(req(n));
  return out;
}

std::vector<TheoremCheck> build_registry() {
  std::vector<TheoremCheck> r;

  r.push_back({"thm_gamma_concurrent", "the lines A h_a(R), B h_b(R), C h_c(R) are concurrent for R != A, B, C", reqs({}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 6; ++k) {
                   ProjPoint x = ctx.random_point();
                   while (is_vertex(x)) x = ctx.random_point();
                   const ProjLine la = join(kA, cfg.map("h_a")(x));
                   const ProjLine lb = join(kB, cfg.map("h_b")(x));
                   const ProjLine lc = join(kC, cfg.map("h_c")(x));
                   expect_concurrent("A h_a(R), B h_b(R), C h_c(R) for R = " + x.str(), la, lb, lc);
                   const ProjPoint g = gamma(cfg, x);
                   expect(on(g, la) && on(g, lb) && on(g, lc), "gamma_P(R) on all three lines",
                          {{"R", x.str()}, {"gamma_P(R)", g.str()}});
                 }
               }});

  r.push_back({"gamma_fixed_points", "gamma_P fixes Q and the anticevian vertices Qa, Qb, Qc", reqs({}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (const char* n : {"Q", "Qa", "Qb", "Qc"})
                   expect_equal(std::string("gamma_P(") + n + ")", gamma(cfg, cfg.point(n)), n, cfg.point(n));
               }});

  r.push_back({"prop_PS", "gamma_P(P) = S, the center of M", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 needs(cfg, "S");
                 expect_equal("gamma_P(P)", gamma(cfg, cfg.P()), "S", cfg.point("S"));
               }});

  r.push_back({"prop_gpdp_a", "gamma_P = delta_P o iota o delta_P", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 expect_equal("delta_P(P)", delta_P(cfg, cfg.P()), "Q'", cfg.point("Q_prime"));
                 for (int k = 0; k < 5; ++k) {
                   const ProjPoint x = ctx.random_generic_point();
                   const ProjPoint d = delta_P(cfg, x);
                   expect_equal("delta_P(delta_P(" + x.str() + "))", delta_P(cfg, d), "X", x);
                   expect_equal("gamma_P(" + x.str() + ")", gamma(cfg, x), "delta_P(iota(delta_P(X)))",
                                delta_P(cfg, isotomic(d)));
                 }
               }});

  r.push_back({"prop_gpdp_b", "the center X of T_P o T_P' satisfies gamma_P(X) = Q'", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 needs(cfg, "X");
                 expect_equal("gamma_P(X)", gamma(cfg, cfg.point("X")), "Q'", cfg.point("Q_prime"));
               }});

  r.push_back({"prop_gpdp_c", "delta_P(S) = iota(Q')", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 needs(cfg, "S");
                 expect_equal("delta_P(S)", delta_P(cfg, cfg.point("S")), "iota(Q')", isotomic(cfg.point("Q_prime")));
               }});

  r.push_back({"thm_pedal_conic", "the pedal triangles of R1 and gamma_P(R1) are inscribed in one conic",
               reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const PedalConic pc = pedal_conic(cfg, ctx.random_pedal_point());
                   for (int i = 0; i < 3; ++i) {
                     expect_on("R1 foot " + std::to_string(i), pc.feet1[i], "pedal conic", pc.conic);
                     expect_on("R2 foot " + std::to_string(i), pc.feet2[i], "pedal conic", pc.conic);
                   }
                 }
               }});

  r.push_back({"cor_pedal_cross_ratio", "(F1 F2, G J) = (D1 D2, H K)", reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const ProjPoint r1 = ctx.random_pedal_point();
                   const ProjPoint r2 = gamma(cfg, r1);
                   const PedalFeet f1 = pedal_triangle(cfg, r1);
                   const PedalFeet f2 = pedal_triangle(cfg, r2);
                   const ProjPoint g = meet(kAB, join(r1, f1[0]));
                   const ProjPoint j = meet(kAB, join(r2, f2[0]));
                   const ProjPoint h = meet(kBC, join(r1, f1[2]));
                   const ProjPoint kk = meet(kBC, join(r2, f2[2]));
                   const ExtRat lhs = cross_ratio(f1[2], f2[2], g, j);
                   const ExtRat rhs = cross_ratio(f1[0], f2[0], h, kk);
                   expect(lhs == rhs, "(F1 F2, G J) == (D1 D2, H K)",
                          {{"R1", r1.str()}, {"(F1 F2, G J)", lhs.str()}, {"(D1 D2, H K)", rhs.str()}});
                 }
               }});

  r.push_back({"cor_simson_converse", "collinear feet of an ordinary R1 force gamma_P(R1) to be infinite",
               reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const Conic& co = cfg.conic("circumconic_O");
                 for (int k = 0; k < 3; ++k) {
                   const ProjPoint r1 = ctx.random_point_on(co);
                   const PedalFeet f = pedal_triangle(cfg, r1);
                   expect(collinear(f[0], f[1], f[2]), "feet collinear", {{"R1", r1.str()}});
                   const ProjPoint r2 = gamma(cfg, r1);
                   expect(is_infinite(r2, cfg.infinity()), "gamma_P(R1) at infinity",
                          {{"R1", r1.str()}, {"gamma_P(R1)", r2.str()}});
                 }
                 for (int k = 0; k < 3; ++k) {
                   ProjPoint r1 = ctx.random_generic_point();
                   while (co.contains(r1)) r1 = ctx.random_generic_point();
                   const PedalFeet f = pedal_triangle(cfg, r1);
                   expect(!collinear(f[0], f[1], f[2]), "feet of a point off the circumconic not collinear",
                          {{"R1", r1.str()}, {"D1", f[0].str()}, {"E1", f[1].str()}, {"F1", f[2].str()}});
                 }
               }});

  r.push_back({"prop_reciprocal_pole", "gamma_P is reciprocal conjugation with pole Q^2", reqs({}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 20; ++k) {
                   const ProjPoint x = ctx.random_generic_point();
                   expect_equal("gamma_P(" + x.str() + ")", gamma(cfg, x), "Q^2 conjugate", gamma_P_pole(cfg, x));
                 }
               }});

  r.push_back({"cor_pole_isotomcomplement", "Q^2 = gamma_P(G) = K(iota(H))", reqs({"H_not_vertex"}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 expect_equal("gamma_P(G)", gamma(cfg, cfg.G()), "Q^2", cfg.point("Q2"));
                 expect_equal("Q^2", cfg.point("Q2"), "K(iota(H))", complement_map()(isotomic(cfg.H())));
               }});

  r.push_back({"thm_gamma_delta", "gamma_P = delta_H", reqs({"off_steiner", "H_not_vertex"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 10; ++k) {
                   const ProjPoint x = ctx.random_generic_point();
                   expect_equal("gamma_P(" + x.str() + ")", gamma(cfg, x), "delta_H(X)", delta_H(cfg, x));
                 }
               }});

  r.push_back({"cor_gamma_G", "gamma_P(G) = delta_H(G) = K(iota(H))", reqs({"off_steiner", "H_not_vertex"}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const ProjPoint target = complement_map()(isotomic(cfg.H()));
                 expect_equal("delta_H(G)", delta_H(cfg, cfg.G()), "K(iota(H))", target);
                 expect_equal("gamma_P(G)", gamma(cfg, cfg.G()), "K(iota(H))", target);
               }});

  r.push_back({"prop_unique_conic", "one conic through three points induces a given involution on l_inf",
               reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const LineInvolution& psi = cfg.involution("psi");
                 expect_equal("conic through A, B, C inducing psi", conic_with_involution_through(kA, kB, kC, psi, cfg.infinity()),
                              "circumconic_O", cfg.conic("circumconic_O"));
                 for (int k = 0; k < 2; ++k) {
                   // Two points on a line in a fixed direction of psi admit
                   // only degenerate conics.
                   auto usable = [&](const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
                     if (a == b || collinear(a, b, c)) return false;
                     for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
                       const ProjPoint d = direction(join(x, y), cfg.infinity());
                       if (psi(d) == d) return false;
                     }
                     return true;
                   };
                   ProjPoint a = ctx.random_generic_point(), b = ctx.random_generic_point(), c = ctx.random_generic_point();
                   while (!usable(a, b, c)) {
                     b = ctx.random_generic_point();
                     c = ctx.random_generic_point();
                   }
                   const Conic k1 = conic_with_involution_through(a, b, c, psi, cfg.infinity());
                   const Conic k2 = conic_with_involution_through(c, a, b, psi, cfg.infinity());
                   for (const auto& [n, p] : {Named{"a", a}, Named{"b", b}, Named{"c", c}}) expect_on(n, p, "conic", k1);
                   expect_same_involution("involution of the conic", induced_involution(k1, cfg.infinity()), "psi", psi);
                   expect_equal("conic(a, b, c)", k1, "conic(c, a, b)", k2);
                 }
               }});

  r.push_back({"prop_pedal_involution", "a pedal conic induces psi on l_inf and has center midpoint(R1, R2)",
               reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const PedalConic pc = pedal_conic(cfg, ctx.random_pedal_point(true));
                   expect_same_involution("pedal conic involution", induced_involution(pc.conic, cfg.infinity()), "psi",
                                          cfg.involution("psi"));
                   expect_equal("center of pedal conic", pc.conic.center(cfg.infinity()), "midpoint(R1, R2)",
                                midpoint(pc.r1, pc.r2, cfg.infinity()));
                 }
               }});

  r.push_back({"cor_reflections_commute", "h_a, h_b, h_c commute with psi on l_inf", reqs({"off_steiner"}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const LineInvolution& psi = cfg.involution("psi");
                 for (const char* n : {"h_a", "h_b", "h_c"}) {
                   const ProjMap& h = cfg.map(n);
                   for (int k = 0; k < 3; ++k) {
                     const ProjPoint d = ctx.random_direction();
                     expect_equal(std::string("psi(") + n + "(" + d.str() + "))", psi(h(d)), std::string(n) + "(psi(d))",
                                  h(psi(d)));
                   }
                 }
               }});

  r.push_back({"lem_line_image_circumconic", "gamma_P maps a line through no vertex onto a circumconic", reqs({}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const ProjLine l = ctx.random_line();
                 std::vector<ProjPoint> images;
                 while (images.size() < 6) {
                   const ProjPoint x = random_point_of(ctx, l);
                   if (!off_sides(x)) continue;
                   const ProjPoint y = gamma(cfg, x);
                   if (std::find(images.begin(), images.end(), y) == images.end()) images.push_back(y);
                 }
                 const Conic c = conic_through_five({kA, kB, kC, images[0], images[1]});
                 for (std::size_t i = 2; i < images.size(); ++i)
                   expect_on("gamma_P image " + std::to_string(i), images[i], "conic through A, B, C and two images", c);
               }});

  r.push_back({"prop_gamma_linf", "gamma_P(l_inf) = circumconic_O", reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const Conic& co = cfg.conic("circumconic_O");
                 std::vector<ProjPoint> images;
                 while (images.size() < 6) {
                   const ProjPoint y = gamma(cfg, ctx.random_direction());
                   if (std::find(images.begin(), images.end(), y) == images.end()) images.push_back(y);
                 }
                 for (std::size_t i = 0; i < images.size(); ++i)
                   expect_on("gamma_P(direction " + std::to_string(i) + ")", images[i], "circumconic_O", co);
                 expect_equal("conic through A, B, C and two images", conic_through_five({kA, kB, kC, images[0], images[1]}),
                              "circumconic_O", co);
               }});

  auto second_points = [](const CevianConfig& cfg, const ProjPoint& r1, const PedalFeet& f) {
    const Conic& co = cfg.conic("circumconic_O");
    std::array<ProjLine, 3> lines{kBC, kBC, kBC};
    for (int i = 0; i < 3; ++i)
      lines[i] = chord_or_tangent(co, kVertices[i], second_intersection(co, join(r1, f[i]), r1));
    return lines;
  };

  r.push_back({"prop_parallel_AA", "for R1 on circumconic_O the lines AA', BB', CC' are parallel", reqs({"off_steiner"}),
               [second_points](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const ProjPoint r1 = ctx.random_point_on(cfg.conic("circumconic_O"));
                   const auto lines = second_points(cfg, r1, pedal_triangle(cfg, r1));
                   const ProjPoint d = direction(lines[0], cfg.infinity());
                   expect_equal("direction of BB'", direction(lines[1], cfg.infinity()), "direction of AA'", d);
                   expect_equal("direction of CC'", direction(lines[2], cfg.infinity()), "direction of AA'", d);
                 }
               }});

  r.push_back({"thm_simson", "feet of R1 on circumconic_O are collinear, on a line parallel to AA'",
               reqs({"off_steiner"}), [second_points](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const ProjPoint r1 = ctx.random_point_on(cfg.conic("circumconic_O"));
                   const ProjLine s = simson_line(cfg, r1);
                   const auto lines = second_points(cfg, r1, pedal_triangle(cfg, r1));
                   expect_equal("direction of the Simson line", direction(s, cfg.infinity()), "direction of AA'",
                                direction(lines[0], cfg.infinity()));
                 }
               }});

  r.push_back({"prop_converse_pedal",
               "the conic through the feet of R1 inducing psi meets the sides again in the feet of gamma_P(R1)",
               reqs({"off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   const ProjPoint r1 = ctx.random_pedal_point(true);
                   const PedalFeet f = pedal_triangle(cfg, r1);
                   const Conic c = conic_with_involution_through(f[0], f[1], f[2], cfg.involution("psi"), cfg.infinity());
                   std::array<ProjPoint, 3> second{f};
                   for (int i = 0; i < 3; ++i) second[i] = second_intersection(c, kSides[i], f[i]);
                   const ProjPoint r2 = feet_line_meet(cfg, second);
                   expect_equal("point with feet on the conic", r2, "gamma_P(R1)", gamma(cfg, r1));
                   expect_equal("conic from R1 feet and psi", c, "pedal conic", pedal_conic(cfg, r1).conic);
                 }
               }});

  r.push_back({"prop_gammaH", "gamma_P(O) = H", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 expect_equal("gamma_P(O)", gamma(cfg, cfg.O()), "H", cfg.H());
               }});

  r.push_back({"prop_gamma_SQ", "gamma_P(SQ) = C_P, SQ is tangent to C_P at Q, S is the pole of QQ'",
               reqs({"ordinary", "off_median"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 needs(cfg, "S");
                 const ProjPoint& S = cfg.point("S");
                 const ProjPoint& Q = cfg.Q();
                 const Conic& cp = cfg.conic("cevian_conic");
                 const ProjLine sq = join(S, Q);
                 for (int k = 0; k < 5; ++k) {
                   const ProjPoint x = random_point_of(ctx, sq);
                   if (!off_sides(x) || x == Q) continue;
                   expect_on("gamma_P(" + x.str() + ")", gamma(cfg, x), "C_P", cp);
                 }
                 expect_equal("tangent to C_P at Q", cp.tangent_at(Q), "SQ", sq);
                 if (!cfg.flag(Guard::OnSteinerCircumellipse))
                   expect_collinear({{"S", S}, {"O", cfg.O()}, {"Q", Q}});
                 expect_equal("pole of QQ' for C_P", cp.pole(join(Q, cfg.point("Q_prime"))), "S", S);
               }});

  r.push_back({"thm_nine_collinear", "X = PQ'.SQ and the nine points X ... T_P'^-1(Q) are collinear",
               reqs({"ordinary", "off_median"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 needs(cfg, "S");
                 needs(cfg, "X");
                 const ProjPoint& S = cfg.point("S");
                 const ProjPoint& X = cfg.point("X");
                 const ProjPoint& Q = cfg.Q();
                 const ProjMap& tp = cfg.map("T_P");
                 const ProjMap tpp_inv = cfg.map("T_P_prime").inverse();
                 expect_equal("X", X, "PQ'.SQ", meet(join(cfg.P(), cfg.point("Q_prime")), join(S, Q)));
                 expect_equal("T_P'^-1(Q)", tpp_inv(Q), "T_P^-1(H)", tp.inverse()(cfg.H()));
                 expect_collinear({{"X", X},
                                   {"T_P(P')", tp(cfg.point("P_prime"))},
                                   {"T_P(G)", tp(cfg.G())},
                                   {"Q", Q},
                                   {"S", S},
                                   {"O", cfg.O()},
                                   {"M(Q)", cfg.map("M")(Q)},
                                   {"T_P'^-1(G)", tpp_inv(cfg.G())},
                                   {"T_P'^-1(Q)", tpp_inv(Q)}});
               }});

  r.push_back({"thm_eight_part_poles", "poles and tangents of C_P, T_P'(C_P) and T_P^-1(C_P); M(QQ') = K^-1(PP')",
               reqs({"ordinary", "off_median"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const Conic& cp = cfg.conic("cevian_conic");
                 const ProjPoint& P = cfg.P();
                 const ProjPoint& Pp = cfg.point("P_prime");
                 const ProjPoint& Q = cfg.Q();
                 const ProjPoint& Qp = cfg.point("Q_prime");
                 const ProjMap& tp = cfg.map("T_P");
                 const ProjMap& tpp = cfg.map("T_P_prime");
                 const ProjPoint tpg = tp(cfg.G());
                 expect_equal("pole of PQ", cp.pole(join(P, Q)), "T_P(G)", tpg);
                 expect_equal("polar of P", cp.polar(P), "P T_P(G)", join(P, tpg));
                 // P' = Q when P lies on the Steiner circumellipse and the line P'Q is undefined.
                 if (!(Pp == Q)) {
                   expect_equal("pole of P'Q", cp.pole(join(Pp, Q)), "M(Q)", cfg.map("M")(Q));
                   expect_equal("tangent to T_P'(C_P) at P'", cp.transformed(tpp).tangent_at(Pp), "P'Q", join(Pp, Q));
                 }
                 const Conic back = cp.transformed(tpp.inverse());
                 expect_equal("T_P'^-1(C_P)", back, "T_P^-1(C_P)", cp.transformed(tp.inverse()));
                 expect_equal("pole of QQ' for T_P^-1(C_P)", back.pole(join(Q, Qp)), "G", cfg.G());
                 expect_equal("M(QQ')", cfg.map("M")(join(Q, Qp)), "K^-1(PP')", anticomplement_map()(join(P, Pp)));
                 if (!(cfg.H() == tp(Pp)))
                   expect_equal("tangent to C_P at H", cp.tangent_at(cfg.H()), "H T_P(P')", join(cfg.H(), tp(Pp)));
               }});

  r.push_back({"prop_circumcevian", "circumcevian triangle of Q: T_P'^-1 image, perspectivity, antipodes, parallel sides",
               reqs({"ordinary", "off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const Conic& co = cfg.conic("circumconic_O");
                 const ProjLine& inf = cfg.infinity();
                 const Triangle cc = circumcevian_triangle(co, cfg.reference(), cfg.Q());
                 const ProjMap tpp_inv = cfg.map("T_P_prime").inverse();
                 const ProjPoint& Pp = cfg.point("P_prime");
                 const Triangle medial(cfg.point("D0"), cfg.point("E0"), cfg.point("F0"));
                 const ProjMap turn = half_turn(cfg.O(), inf);
                 const char* primes[3] = {"A'", "B'", "C'"};
                 for (int i = 0; i < 3; ++i) {
                   expect_equal(primes[i], cc[i], "T_P'^-1(midpoint of vertex and P')", tpp_inv(midpoint(kVertices[i], Pp, inf)));
                   const ProjPoint antipode = turn(cc[i]);
                   expect_on(std::string("antipode of ") + primes[i], antipode, "circumconic_O", co);
                   expect_equal(std::string("antipode of ") + primes[i], antipode, "T_P'^-1(medial vertex)", tpp_inv(medial[i]));
                 }
                 expect_equal("perspector(A'B'C', D0E0F0)", perspector(cc, medial), "O", cfg.O());
                 const ProjPoint def[3] = {cfg.point("D"), cfg.point("E"), cfg.point("F")};
                 for (int i = 0; i < 3; ++i) {
                   const int j = (i + 1) % 3, k = (i + 2) % 3;
                   expect_equal(std::string("direction of ") + primes[j] + primes[k], direction(join(cc[j], cc[k]), inf),
                                "direction of the matching side of DEF", direction(join(def[j], def[k]), inf));
                 }
               }});

  r.push_back({"thm_O_perspector", "O is the perspector of the circumcevian triangle of Q and the tangential triangle",
               reqs({"ordinary", "off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const Conic& co = cfg.conic("circumconic_O");
                 expect_equal("perspector", perspector(tangential_triangle(co, cfg.reference()),
                                                       circumcevian_triangle(co, cfg.reference(), cfg.Q())),
                              "O", cfg.O());
               }});

  r.push_back({"lem_collineation", "gamma o gamma_P is a collineation fixing A, B, C", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const ProjPoint w = ctx.random_generic_point();
                 const ProjMap t = map_from_four_points({kA, kB, kC, w}, {kA, kB, kC, cfg.isogonal(gamma(cfg, w))});
                 for (int k = 0; k < 5; ++k) {
                   const ProjPoint x = ctx.random_generic_point();
                   expect_equal("collineation(" + x.str() + ")", t(x), "gamma(gamma_P(X))", cfg.isogonal(gamma(cfg, x)));
                 }
               }});

  r.push_back({"thm_tcc", "gamma(H) is the TCC-perspector of gamma(Q)", reqs({"ordinary", "off_steiner", "H_not_vertex"}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 expect_equal("TCC-perspector of gamma(Q)", tcc_perspector_synthetic(cfg, cfg.isogonal(cfg.Q())),
                              "gamma(H)", cfg.isogonal(cfg.H()));
               }});

  r.push_back({"thm_tcc_formula", "T(Y) = gamma K^-1 T_R^-1 K gamma(Y) with R = K^-1(gamma(Y))",
               reqs({"ordinary", "off_steiner", "H_not_vertex"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const ProjPoint gq = cfg.isogonal(cfg.Q());
                 expect_equal("formula at gamma(Q)", tcc_perspector(cfg), "perspector at gamma(Q)",
                              tcc_perspector_synthetic(cfg, gq));
                 expect_equal("formula at gamma(Q)", tcc_perspector(cfg), "gamma(H)", cfg.isogonal(cfg.H()));
                 for (int k = 0; k < 2; ++k) {
                   ProjPoint y = ctx.random_generic_point();
                   while (!tcc_input_ok(cfg, y)) y = ctx.random_generic_point();
                   expect_equal("formula at " + y.str(), tcc_perspector_formula(cfg, y), "perspector",
                                tcc_perspector_synthetic(cfg, y));
                 }
               }});

  r.push_back({"thm_persG", "the perspector of ABC and its tangential triangle for circumconic_O is gamma_P(G)",
               reqs({"ordinary", "off_steiner"}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 expect_equal("perspector", perspector(cfg.reference(), tangential_triangle(cfg.conic("circumconic_O"), cfg.reference())),
                              "gamma_P(G)", gamma(cfg, cfg.G()));
               }});

  r.push_back({"appendix_kmid", "K(R) is the midpoint of T_P(R) and T_P'(R)", reqs({}), [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 for (int k = 0; k < 3; ++k) {
                   ProjPoint x = ctx.random_point();
                   while (is_infinite(x, cfg.infinity())) x = ctx.random_point();
                   expect_equal("K(" + x.str() + ")", complement_map()(x), "midpoint(T_P(R), T_P'(R))",
                                midpoint(cfg.map("T_P")(x), cfg.map("T_P_prime")(x), cfg.infinity()));
                 }
               }});

  r.push_back({"appendix_commute", "T_P K^-1 and T_P' K^-1 commute; M is symmetric in P and P'", reqs({}),
               [](CheckContext& ctx) {
                 const auto& cfg = ctx.cfg();
                 const ProjMap a = cfg.map("T_P") * anticomplement_map();
                 const ProjMap b = cfg.map("T_P_prime") * anticomplement_map();
                 expect_equal("T_P K^-1 T_P' K^-1", a * b, "T_P' K^-1 T_P K^-1", b * a);
                 const CevianConfig twin = CevianConfig::derive(cfg.frame(), cfg.point("P_prime"));
                 expect_equal("M for P", cfg.map("M"), "M for P'", twin.map("M"));
                 if (cfg.available("S") || twin.available("S"))
                   expect_equal("S for P", cfg.point("S"), "S for P'", twin.point("S"));
               }});

  std::sort(r.begin(), r.end(), [](const TheoremCheck& x, const TheoremCheck& y) { return x.id < y.id; });
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

ProjPoint CheckContext::random_point() {
  for (;;) {
    const Vec3 v{Int(static_cast<long>(rng_.uniform(-bound_, bound_))), Int(static_cast<long>(rng_.uniform(-bound_, bound_))),
                 Int(static_cast<long>(rng_.uniform(-bound_, bound_)))};
    if (!is_zero(v)) return ProjPoint(v);
  }
}

ProjPoint CheckContext::random_generic_point() {
  for (;;) {
    const ProjPoint p = random_point();
    if (off_sides(p) && !is_infinite(p, cfg_.infinity())) return p;
  }
}

ProjPoint CheckContext::random_direction() {
  for (;;) {
    const Int a = rng_.uniform(-bound_, bound_);
    const Int b = rng_.uniform(-bound_, bound_);
    const Int c = -(a + b);
    if (a != 0 && b != 0 && c != 0) return ProjPoint(a, b, c);
  }
}

ProjLine CheckContext::random_line() {
  for (;;) {
    const ProjPoint p = random_point();
    if (off_sides(p)) return ProjLine(p.coords());
  }
}

ProjPoint CheckContext::random_pedal_point(bool nondegenerate_conic) {
  for (int attempt = 0; attempt < kPointRetries; ++attempt) {
    const ProjPoint r = random_generic_point();
    bool fixed = false;
    for (const char* n : {"Q", "Qa", "Qb", "Qc"}) fixed = fixed || r == cfg_.point(n);
    if (fixed) continue;
    const ProjPoint r2 = gamma_P(cfg_, r);
    if (!off_sides(r2) || is_infinite(r2, cfg_.infinity())) continue;
    bool foot_at_vertex = false;
    for (const ProjPoint* x : {&r, &r2})
      for (const ProjPoint& f : pedal_triangle(cfg_, *x)) foot_at_vertex = foot_at_vertex || is_vertex(f);
    if (foot_at_vertex) continue;
    if (nondegenerate_conic && pedal_conic(cfg_, r).conic.is_degenerate()) continue;
    return r;
  }
  retry_exhausted("a pedal point");
}

ProjPoint CheckContext::random_point_on(const Conic& c) {
  for (int attempt = 0; attempt < kPointRetries; ++attempt) {
    const ProjPoint& v = kVertices[static_cast<std::size_t>(rng_.uniform(0, 2))];
    const ProjPoint x = second_intersection(c, join(v, random_generic_point()), v);
    if (!is_vertex(x) && !is_infinite(x, cfg_.infinity())) return x;
  }
  retry_exhausted("a point on the conic");
}

const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = build_registry();
  return registry;
}

bool filter_matches(const std::string& filter, const std::string& id) {
  if (filter.empty()) return true;
  std::istringstream in(filter);
  std::string pattern;
  while (std::getline(in, pattern, ','))
    if (!pattern.empty() && fnmatch(pattern.c_str(), id.c_str(), 0) == 0) return true;
  return false;
}

std::vector<const TheoremCheck*> select_checks(const std::string& filter) {
  std::vector<const TheoremCheck*> out;
  for (const TheoremCheck& c : theorem_registry())
    if (filter_matches(filter, c.id)) out.push_back(&c);
  return out;
}

CheckResult run_check(const TheoremCheck& check, const CevianConfig& cfg, std::uint64_t seed, std::int64_t bound) {
  CheckResult res{check.id, CheckStatus::Pass, {}, {}};
  if (const auto unmet = cfg.first_unmet(check.hypotheses)) {
    res.status = CheckStatus::Skipped;
    res.reason = requirement_name(*unmet);
    return res;
  }
  CheckContext ctx(cfg, seed, bound);
  try {
    check.verify(ctx);
    return res;
  } catch (const CheckSkipped& s) {
    res.status = CheckStatus::Skipped;
    res.reason = s.reason;
    return res;
  } catch (const CheckFailure& f) {
    res.status = CheckStatus::Fail;
    res.reason = "equality violated";
    res.witness = f.witness;
  } catch (const std::exception& e) {
    res.status = CheckStatus::Fail;
    res.reason = e.what();
    res.witness.equality = "construction completes";
  }
  res.witness.objects["P"] = cfg.P().str();
  return res;
}

// ---------------------------------------------------------------------------

namespace {

TriangleFrame draw_frame(std::uint64_t seed, std::int64_t bound) {
  SplitMix64 rng(derive_seed(seed, 0, "triangle"));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<CartesianPoint, 3> v;
    for (auto& p : v) p = {rng.rational(bound), rng.rational(bound)};
    const Rat ux = v[1].x - v[0].x, uy = v[1].y - v[0].y;
    const Rat wx = v[2].x - v[0].x, wy = v[2].y - v[0].y;
    if (ux * wy - uy * wx == 0) continue;
    bool right = false;
    for (int i = 0; i < 3; ++i) {
      const CartesianPoint& o = v[i];
      const CartesianPoint& p = v[(i + 1) % 3];
      const CartesianPoint& q = v[(i + 2) % 3];
      right = right || (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y) == 0;
    }
    if (!right) return TriangleFrame(v[0], v[1], v[2]);
  }
  retry_exhausted("a triangle");
}

}  // namespace

ConfigSampler::ConfigSampler(std::uint64_t seed, std::int64_t bound)
    : seed_(seed), bound_(bound), frame_(draw_frame(seed, bound)) {
  if (bound < 1) throw GeometryError(ErrorCode::DegenerateInput, "coordinate bound must be positive");
}

CevianConfig ConfigSampler::sample(std::uint64_t index, const std::vector<Requirement>& required) {
  SplitMix64 rng(derive_seed(seed_, index + 1, "config"));
  auto wants = [&](Guard g) {
    return std::any_of(required.begin(), required.end(), [g](const Requirement& r) { return r.guard == g && r.holds; });
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<Rat, 3> c{rng.rational(bound_), rng.rational(bound_), rng.rational(bound_)};
    const auto i = static_cast<std::size_t>(rng.uniform(0, 2));
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    if (wants(Guard::OnSide)) c[i] = 0;
    if (wants(Guard::OnAnticomplementarySide)) c[j] = -c[k];
    if (wants(Guard::OnMedian)) c[j] = c[k];
    if (wants(Guard::AtInfinity)) c[i] = -(c[j] + c[k]);
    if (wants(Guard::OnSteinerCircumellipse)) {
      c[i] = -(c[j] + c[k]);
      c = {c[1] * c[2], c[2] * c[0], c[0] * c[1]};
    }
    if (wants(Guard::PEqualsG)) c = {Rat(1), Rat(1), Rat(1)};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    const ProjPoint p(integerize(c[0], c[1], c[2]));
    if (is_vertex(p)) continue;
    CevianConfig cfg = CevianConfig::derive(frame_, p);
    if (!cfg.first_unmet(required)) return cfg;
  }
  throw GeometryError(ErrorCode::RetryExhausted, "no configuration met the requirements after 10000 draws");
}

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& [id, t] : summary) n += t.fail;
  return n;
}

const std::vector<Requirement>& suite_requirements() {
  static const std::vector<Requirement> r{parse_requirement("off_sides"), parse_requirement("off_anticomplementary")};
  return r;
}

SuiteReport run_suite(std::uint64_t seed, std::uint64_t count, const std::string& filter, std::int64_t bound) {
  if (count == 0) throw GeometryError(ErrorCode::DegenerateInput, "count must be at least 1");
  const auto checks = select_checks(filter);
  if (checks.empty()) throw GeometryError(ErrorCode::DegenerateInput, "no theorem matches \"" + filter + "\"");
  ConfigSampler sampler(seed, bound);
  SuiteReport report{seed, count, bound, filter, sampler.frame().vertices(), {}, {}};
  for (const TheoremCheck* c : checks) report.summary[c->id];
  for (std::uint64_t i = 0; i < count; ++i) {
    const CevianConfig cfg = sampler.sample(i, suite_requirements());
    ConfigRun run{i, cfg.P(), {}};
    for (const TheoremCheck* c : checks) {
      CheckResult res = run_check(*c, cfg, derive_seed(seed, i + 1, c->id), bound);
      CheckTally& t = report.summary[c->id];
      (res.status == CheckStatus::Pass ? t.pass : res.status == CheckStatus::Fail ? t.fail : t.skipped)++;
      run.results.push_back(std::move(res));
    }
    report.configs.push_back(std::move(run));
  }
  return report;
}

}  // namespace cevian
