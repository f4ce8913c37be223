#pragma once

// Exact integer/rational linear algebra on the small matrices the kernel
// needs: 3x3 products and adjugates, and nullspaces of <= 9 column systems.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace cevian {

using Int = mpz_class;
using Rat = mpq_class;

using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<Vec3, 3>;  // row major

Int dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
bool proportional(const Vec3& a, const Vec3& b);

Int det(const Mat3& m);
Mat3 adjugate(const Mat3& m);
Mat3 transpose(const Mat3& m);
Mat3 multiply(const Mat3& a, const Mat3& b);
Vec3 multiply(const Mat3& m, const Vec3& v);
Mat3 identity3();
bool is_zero(const Mat3& m);
bool proportional(const Mat3& a, const Mat3& b);

// Divides by the content and makes the first nonzero entry positive.
// Returns false (leaving the input untouched) for the zero vector/matrix.
bool canonicalize(Vec3& v);
bool canonicalize(Mat3& m);

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

// Basis of { x : rows * x = 0 } via reduced row echelon form.
std::vector<RatVec> nullspace(RatMatrix rows, std::size_t columns);
std::size_t rank(RatMatrix rows, std::size_t columns);

// Clears denominators and divides by the content; the zero vector is kept.
std::vector<Int> integerize(const RatVec& v);
Vec3 integerize(const Rat& x, const Rat& y, const Rat& z);

std::string to_string(const Rat& r);
// Parses "num/den" or "num"; throws GeometryError(ParseError) on a zero
// denominator or malformed text.
Rat parse_rational(const std::string& text);

}  // namespace cevian
