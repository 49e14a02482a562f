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

#include "weham/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "weham/errors.hpp"

namespace weham {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {}

Polynomial::Polynomial(std::size_t nvars, const std::vector<std::pair<Exponent, double>>& terms)
    : nvars_(nvars) {
  for (const auto& [exp, coeff] : terms) {
    if (exp.size() != nvars_) {
      throw InputError("polynomial term has exponent of length " + std::to_string(exp.size()) +
                       ", expected " + std::to_string(nvars_));
    }
    add_term(exp, coeff);
  }
  strip();
}

Polynomial Polynomial::constant(std::size_t nvars, double value) {
  return Polynomial(nvars, {{Exponent(nvars, 0u), value}});
}

Polynomial Polynomial::coordinate(std::size_t nvars, std::size_t index, double coeff) {
  if (index >= nvars) {
    throw InputError("coordinate index " + std::to_string(index) + " out of range for " +
                     std::to_string(nvars) + " variables");
  }
  Exponent e(nvars, 0u);
  e[index] = 1;
  return Polynomial(nvars, {{e, coeff}});
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponent exp, double coeff) {
  return Polynomial(nvars, {{std::move(exp), coeff}});
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

double Polynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::constant_term() const { return coefficient(Exponent(nvars_, 0u)); }

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [exp, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

bool Polynomial::is_zero(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const auto& t) { return std::abs(t.second) <= tol; });
}

bool Polynomial::is_constant(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& t) {
    return total_degree(t.first) == 0 || std::abs(t.second) <= tol;
  });
}

void Polynomial::add_term(const Exponent& exp, double coeff) {
  if (coeff == 0.0) return;
  terms_[exp] += coeff;
}

void Polynomial::strip() {
  std::erase_if(terms_, [](const auto& t) { return std::abs(t.second) <= kCoefficientEpsilon; });
}

static void require_same_nvars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("polynomial variable count mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_nvars(nvars_, other.nvars_);
  for (const auto& [exp, c] : other.terms_) add_term(exp, c);
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_nvars(nvars_, other.nvars_);
  for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(double factor) {
  for (auto& [exp, c] : terms_) c *= factor;
  strip();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_nvars(a.nvars_, b.nvars_);
  Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  out.strip();
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= nvars_) {
    throw InputError("derivative index " + std::to_string(index) + " out of range for " +
                     std::to_string(nvars_) + " variables");
  }
  Polynomial out(nvars_);
  for (const auto& [exp, c] : terms_) {
    if (exp[index] == 0) continue;
    Exponent e = exp;
    e[index] -= 1;
    out.add_term(e, c * exp[index]);
  }
  out.strip();
  return out;
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (x.size() != nvars_) {
    throw InputError("evaluation point has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(nvars_));
  }
  double sum = 0.0;
  for (const auto& [exp, c] : terms_) {
    double m = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (unsigned p = 0; p < exp[k]; ++p) m *= x[k];
    }
    sum += m;
  }
  return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, c] = *it;
    const bool is_const = total_degree(exp) == 0;
    double mag = std::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (is_const || mag != 1.0) {
      os << mag;
      need_star = true;
    }
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (exp[k] == 0) continue;
      if (need_star) os << "*";
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (exp[k] > 1) os << "^" << exp[k];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace weham
