#pragma once

// Closed-form quartics written out by hand, used as independent references for
// the linear-system solver.

#include "cremona/poly.hpp"

#include <array>

namespace cremona::reference {

/// The five quartics through the coordinate points and [1:1:1:1] spanning the
/// anticanonical system of the five-point blow-up.
inline std::array<Poly, 5> anticanonical_basis() {
  Poly x = var(0), y = var(1), z = var(2), w = var(3);
  return {(x - y) * (z - w) * x * y, (x - y) * (z - w) * z * w, (x - z) * (y - w) * x * z,
          (x - z) * (y - w) * y * w, (x - w) * (y - z) * x * w};
}

/// Coefficients of the unique anticanonical quartic when p0 = [1:A:B:C].
inline std::array<Rational, 5> anticanonical_coefficients(const Rational& A, const Rational& B, const Rational& C) {
  return {(B - 1) * C, A - C, -(A - 1) * C, -(B - C), A * B - C};
}

inline Poly anticanonical_quartic(const Rational& A, const Rational& B, const Rational& C) {
  auto f = anticanonical_basis();
  auto g = anticanonical_coefficients(A, B, C);
  Poly out(4);
  for (int i = 0; i < 5; ++i) out += f[i] * g[i];
  return out;
}

/// Q0 on the placement [1:0:0:0], [0:1:0:0], [0:0:1:0], [1:a:b:c], [1:1:1:1], [0:0:0:1].
inline Poly quartic_f0(const Rational& a, const Rational& b, const Rational& c) {
  Poly x = var(0), y = var(1), z = var(2), w = var(3);
  return x * y * z * (y - w) * (b * c * (-a + b - 1)) + y * z * z * (y - w) * (a * (c - b)) +
         x * z * z * (y - w) * (a * b) + x * y * (x - w) * (y - z) * (b * b * c) -
         x * z * (x - y) * (y - z) * (a * b * c) + y * z * (z - w) * (x - y) * (b * (c - a));
}

/// Q12 on the placement [0:1:0:0], [1:0:0:0], [1:a:b:c], [0:0:1:0], [0:0:0:1], [1:1:1:1].
inline Poly quartic_f12(const Rational& a, const Rational& b, const Rational& c) {
  Poly x = var(0), y = var(1), z = var(2), w = var(3);
  return y * z * (x - w) * (z - w) * (-a * (b - 1) * (b - 1) * c) + y * z * (x - w) * (x - z) * (a * (b - c) * c) -
         y * y * (x - w) * (x - z) * (b * (b - c) * c) + w * y * (x - z) * (z - w) * (a * b * (1 - 2 * c + b * c)) +
         w * x * (x - z) * (z - w) * (a * a * b * (c - 1)) - x * y * (x - z) * (z - w) * (a * (b - 1) * b * c);
}

/// Q24 on the same placement as quartic_f12.
inline Poly quartic_f24(const Rational& a, const Rational& b, const Rational& c) {
  Poly x = var(0), y = var(1), z = var(2), w = var(3);
  return y * w * (x - z) * (x - w) * ((a - b) * (a - c) * (b - c)) +
         x * w * (x - z) * (y - w) * (a * (a - b) * b * (a - c) * (c - 1)) -
         x * w * (x - z) * (y - z) * ((a - 1) * a * b * (a - c) * (c - 1)) +
         x * z * (x - w) * (y - w) * (a * (a - b) * (b - 1) * (c - 1) * c) +
         x * y * (x - w) * (y - w) * ((a - 1) * (b - 1) * b * (b - c) * c) -
         x * y * (x - w) * (z - w) * (a * (b - 1) * (b - 1) * (a - c) * c);
}

}  // namespace cremona::reference
