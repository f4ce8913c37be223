#include "cevian/linalg.hpp"

#include <utility>

#include "cevian/error.hpp"

namespace cevian {

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {Int(a[1] * b[2] - a[2] * b[1]), Int(a[2] * b[0] - a[0] * b[2]),
          Int(a[0] * b[1] - a[1] * b[0])};
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

bool proportional(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

Int det(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 adjugate(const Mat3& m) {
  // Columns of the adjugate are cross products of row pairs.
  const Vec3 c0 = cross(m[1], m[2]);
  const Vec3 c1 = cross(m[2], m[0]);
  const Vec3 c2 = cross(m[0], m[1]);
  Mat3 adj;
  for (int i = 0; i < 3; ++i) {
    adj[i] = {c0[i], c1[i], c2[i]};
  }
  return adj;
}

Mat3 transpose(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Vec3 multiply(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

bool is_zero(const Mat3& m) { return is_zero(m[0]) && is_zero(m[1]) && is_zero(m[2]); }

bool proportional(const Mat3& a, const Mat3& b) {
  // a ~ b iff every 2x2 "cross" a_ij b_kl - a_kl b_ij vanishes.
  std::array<const Int*, 9> x{}, y{};
  for (int i = 0; i < 9; ++i) {
    x[i] = &a[i / 3][i % 3];
    y[i] = &b[i / 3][i % 3];
  }
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j)
      if (*x[i] * *y[j] != *x[j] * *y[i]) return false;
  return true;
}

namespace {

template <std::size_t N>
bool canonicalize_entries(std::array<Int*, N> entries) {
  Int g = 0;
  for (Int* e : entries) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e->get_mpz_t());
  if (g == 0) return false;
  for (Int* e : entries) {
    if (*e != 0) {
      if (sgn(*e) < 0) g = -g;
      break;
    }
  }
  if (g != 1) {
    for (Int* e : entries) mpz_divexact(e->get_mpz_t(), e->get_mpz_t(), g.get_mpz_t());
  }
  return true;
}

}  // namespace

bool canonicalize(Vec3& v) { return canonicalize_entries<3>({&v[0], &v[1], &v[2]}); }

bool canonicalize(Mat3& m) {
  std::array<Int*, 9> e{};
  for (int i = 0; i < 9; ++i) e[i] = &m[i / 3][i % 3];
  return canonicalize_entries<9>(e);
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> reduce(RatMatrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = 1 / rows[r][c];
    for (std::size_t k = c; k < columns; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t k = c; k < columns; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RatVec> nullspace(RatMatrix rows, std::size_t columns) {
  const std::vector<std::size_t> pivots = reduce(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(columns, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(RatMatrix rows, std::size_t columns) { return reduce(rows, columns).size(); }

std::vector<Int> integerize(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const Rat& x : v) {
    Int n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g > 1)
    for (Int& n : out) n /= g;
  return out;
}

Vec3 integerize(const Rat& x, const Rat& y, const Rat& z) {
  const std::vector<Int> v = integerize(RatVec{x, y, z});
  return {v[0], v[1], v[2]};
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  const auto fail = [&] { throw GeometryError(ErrorCode::ParseError, "malformed rational \"" + text + "\""); };
  const auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') fail();
  Int n(num[0] == '+' ? num.substr(1) : num, 10);
  Int d(den, 10);
  if (d == 0) fail();
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace cevian
