// Copyright 2026 The weham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared generators and oracles for the unit suites.
#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "weham/polynomial.hpp"
#include "weham/random.hpp"

namespace weham::testing {

// Random polynomial with small integer coefficients and exponents <= max_exp.
inline Polynomial random_polynomial(SplitMix64& rng, std::size_t nvars, std::size_t terms, unsigned max_exp = 2) {
  Polynomial p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (auto& k : e) k = static_cast<unsigned>(rng.next() % (max_exp + 1));
    const double coeff = static_cast<double>(static_cast<int>(rng.next() % 7) - 3);
    p += Polynomial::monomial(nvars, e, coeff);
  }
  return p;
}

inline Eigen::VectorXd random_point(SplitMix64& rng, std::size_t dim, double half_width = 2.0) {
  return rng.point_in_box(static_cast<Eigen::Index>(dim), half_width);
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Largest |coefficient| of p, zero for the zero polynomial.
inline double coefficient_norm(const Polynomial& p) { return p.max_abs_coefficient(); }

}  // namespace weham::testing
