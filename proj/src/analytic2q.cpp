// Copyright 2026 The steadyent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steadyent/analytic2q.hpp"

#include <algorithm>
#include <cmath>

namespace steadyent::analytic2q {
namespace {

int sign(int bits) { return (bits % 2 == 0) ? 1 : -1; }

int index(int s1, int s2) { return 2 * s1 + s2; }

double common_denominator(const TwoQubitParams& p) {
  return 2.0 * p.g * p.g + (p.r + p.gamma / 2.0) * (p.r + p.gamma);
}

}  // namespace

Coefficients coefficient_rhs(const Coefficients& c, const TwoQubitParams& p) {
  const Complex i(0.0, 1.0);
  Coefficients out;
  for (int s1p = 0; s1p < 2; ++s1p) {
    for (int s2p = 0; s2p < 2; ++s2p) {
      for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
          const Complex rate = -i * p.g * double(sign(s1p + s2p) - sign(s1 + s2)) +
                               p.gamma / 2.0 * double(sign(s1p + s1) + sign(s2p + s2) - 2) -
                               2.0 * p.r;
          const Complex feed = c(index(0, s2p), index(0, s2)) + c(index(1, s2p), index(1, s2)) +
                               c(index(s1p, 0), index(s1, 0)) + c(index(s1p, 1), index(s1, 1));
          out(index(s1p, s2p), index(s1, s2)) =
              rate * c(index(s1p, s2p), index(s1, s2)) + p.r / 2.0 * feed;
        }
      }
    }
  }
  return out;
}

Complex coherence_entry(const TwoQubitParams& p) {
  return p.r * Complex(p.r + p.gamma / 2.0, -p.g) / (4.0 * common_denominator(p));
}

double antidiagonal_entry(const TwoQubitParams& p) {
  return p.r * p.r * (p.r + p.gamma / 2.0) /
         (4.0 * (p.r + p.gamma) * common_denominator(p));
}

DensityMatrix steady_state(const TwoQubitParams& p) {
  if (!(p.r > 0.0)) throw DomainError("analytic2q::steady_state requires r > 0");
  const Complex c = coherence_entry(p);
  const double a = antidiagonal_entry(p);
  Operator rho(4, 4);
  // rows/cols: 00, 01, 10, 11
  rho << 0.25, c, c, a,
         std::conj(c), 0.25, a, std::conj(c),
         std::conj(c), a, 0.25, std::conj(c),
         a, c, c, 0.25;
  return DensityMatrix::assume_valid(std::move(rho));
}

double negativity_numerator(const TwoQubitParams& p) {
  const double rg = p.r + p.gamma;
  const double rh = p.r + p.gamma / 2.0;
  return p.gamma * rh * rh + p.g * p.g * rg - p.r * p.g * rg;
}

double negativity(const TwoQubitParams& p) {
  const double value =
      -negativity_numerator(p) / (2.0 * (p.r + p.gamma) * common_denominator(p));
  return std::max(0.0, value);
}

std::vector<Complex> spectrum(const TwoQubitParams& p) {
  std::vector<Complex> out;
  out.reserve(16);
  out.emplace_back(0.0);
  out.insert(out.end(), 2, Complex(-p.r));
  out.emplace_back(-2.0 * p.r);
  out.insert(out.end(), 4, Complex(-2.0 * (p.r + p.gamma)));
  const double centre = -(1.5 * p.r + p.gamma);
  const double disc = p.g * p.g - p.r * p.r / 16.0;
  Complex shift = disc >= 0.0 ? Complex(0.0, 2.0 * std::sqrt(disc))
                              : Complex(2.0 * std::sqrt(-disc), 0.0);
  out.insert(out.end(), 4, Complex(centre) + shift);
  out.insert(out.end(), 4, Complex(centre) - shift);
  return out;
}

double threshold_r(double g_over_gamma) {
  const double g = g_over_gamma;
  if (!(g > 1.0)) throw DomainError("threshold_r: no entangled region for g/gamma <= 1");
  // numerator at gamma = 1: (1 - g) r^2 + (1 + g^2 - g) r + (1/4 + g^2)
  const double a = 1.0 - g;
  const double b = 1.0 + g * g - g;
  const double c = 0.25 + g * g;
  return (b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * (g - 1.0));
}

}  // namespace steadyent::analytic2q
