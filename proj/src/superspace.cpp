// Copyright 2026 The superbi Authors
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

#include "superbi/superspace.hpp"

#include <vector>

#include "render.hpp"
#include "superbi/errors.hpp"

namespace superbi {

namespace grassmann {

Signed wedge(ThetaMask a, ThetaMask b) noexcept {
  if (a & b) return {};
  int swaps = 0;
  for (int i = 0; i < 3; ++i) {
    if (a & (1u << i)) swaps += popcount(static_cast<ThetaMask>(b & ((1u << i) - 1)));
  }
  return {static_cast<ThetaMask>(a | b), (swaps & 1) ? -1 : 1};
}

Signed left_derivative(int i, ThetaMask m) noexcept {
  const ThetaMask bit = static_cast<ThetaMask>(1u << (i - 1));
  if (!(m & bit)) return {};
  const int before = popcount(static_cast<ThetaMask>(m & (bit - 1)));
  return {static_cast<ThetaMask>(m & ~bit), (before & 1) ? -1 : 1};
}

Signed ordered_product(std::initializer_list<int> indices) noexcept {
  Signed acc{0, 1};
  for (int i : indices) {
    const Signed next = wedge(acc.mask, static_cast<ThetaMask>(1u << (i - 1)));
    if (next.sign == 0) return {};
    acc = {next.mask, acc.sign * next.sign};
  }
  return acc;
}

}  // namespace grassmann

namespace {

void check_index(int i) {
  if (i < 1 || i > 3) throw InvalidArgument("variable index must be 1, 2 or 3");
}

std::string monomial_string(const SuperMonomial& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) detail::append_factor(s, "x" + std::to_string(i + 1), m.x[i]);
  for (int i = 0; i < 3; ++i) {
    if (m.theta & (1u << i)) detail::append_factor(s, "t" + std::to_string(i + 1), 1);
  }
  return s;
}

}  // namespace

SuperElement SuperElement::constant(const ParamScalar& c) {
  SuperElement f;
  f.add_term(SuperMonomial{}, c);
  return f;
}

SuperElement SuperElement::x(int i) {
  check_index(i);
  XExponents e{0, 0, 0};
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(ParamScalar(1), e);
}

SuperElement SuperElement::theta(int i) {
  check_index(i);
  return monomial(ParamScalar(1), {0, 0, 0}, {i});
}

SuperElement SuperElement::monomial(const ParamScalar& c, const XExponents& exponents,
                                    std::initializer_list<int> thetas) {
  for (int i : thetas) check_index(i);
  const grassmann::Signed s = grassmann::ordered_product(thetas);
  SuperElement f;
  if (s.sign != 0) f.add_term(SuperMonomial{exponents, s.mask}, s.sign > 0 ? c : -c);
  return f;
}

ParamScalar SuperElement::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamScalar() : it->second;
}

std::optional<int> SuperElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    const int q = grassmann::popcount(m.theta) & 1;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

void SuperElement::add_term(const SuperMonomial& m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperElement SuperElement::operator-() const {
  SuperElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SuperElement& SuperElement::operator+=(const SuperElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SuperElement operator*(const ParamScalar& c, const SuperElement& f) {
  SuperElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : f.terms_) r.terms_.emplace(m, c * v);
  return r;
}

SuperElement operator*(const SuperElement& f, const SuperElement& g) {
  SuperElement r;
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      const grassmann::Signed s = grassmann::wedge(mf.theta, mg.theta);
      if (s.sign == 0) continue;
      SuperMonomial m;
      for (std::size_t i = 0; i < 3; ++i) m.x[i] = static_cast<std::uint16_t>(mf.x[i] + mg.x[i]);
      m.theta = s.mask;
      const ParamScalar c = cf * cg;
      r.add_term(m, s.sign > 0 ? c : -c);
    }
  }
  return r;
}

SuperElement SuperElement::map_coefficients(
    const std::function<ParamScalar(const ParamScalar&)>& fn) const {
  SuperElement r;
  for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
  return r;
}

std::string SuperElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    detail::append_term(out, it->second, monomial_string(it->first));
  return out;
}

SuperElement super_mul(const SuperElement& f, const SuperElement& g) { return f * g; }

GradedParts grade_split(const SuperElement& f) {
  GradedParts parts;
  for (const auto& [m, c] : f.terms()) {
    (grassmann::popcount(m.theta) % 2 == 0 ? parts.even : parts.odd).add_term(m, c);
  }
  return parts;
}

SuperElement x_homogeneous_component(const SuperElement& f, int degree) {
  SuperElement r;
  for (const auto& [m, c] : f.terms()) {
    if (m.x_degree() == degree) r.add_term(m, c);
  }
  return r;
}

UVPolynomial UVPolynomial::constant(const ParamScalar& c) { return monomial(c, 0, 0); }

UVPolynomial UVPolynomial::monomial(const ParamScalar& c, int u_power, int v_power) {
  if (u_power < 0 || v_power < 0) throw InvalidArgument("negative exponent in u,v monomial");
  UVPolynomial h;
  h.add_term({static_cast<std::uint16_t>(u_power), static_cast<std::uint16_t>(v_power)}, c);
  return h;
}

ParamScalar UVPolynomial::coefficient(int u_power, int v_power) const {
  auto it = terms_.find({static_cast<std::uint16_t>(u_power), static_cast<std::uint16_t>(v_power)});
  return it == terms_.end() ? ParamScalar() : it->second;
}

int UVPolynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::optional<int> UVPolynomial::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    const int k = e.first + e.second;
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

void UVPolynomial::add_term(const Exponents& e, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UVPolynomial UVPolynomial::operator-() const {
  UVPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

UVPolynomial& UVPolynomial::operator+=(const UVPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

UVPolynomial& UVPolynomial::operator-=(const UVPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

UVPolynomial operator*(const ParamScalar& c, const UVPolynomial& h) {
  UVPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : h.terms_) r.terms_.emplace(e, c * v);
  return r;
}

UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b) {
  UVPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({static_cast<std::uint16_t>(ea.first + eb.first),
                  static_cast<std::uint16_t>(ea.second + eb.second)},
                 ca * cb);
    }
  }
  return r;
}

UVPolynomial UVPolynomial::d_u() const {
  UVPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e.first == 0) continue;
    r.add_term({static_cast<std::uint16_t>(e.first - 1), e.second},
               ParamScalar(static_cast<long>(e.first)) * c);
  }
  return r;
}

UVPolynomial UVPolynomial::d_v() const {
  UVPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e.second == 0) continue;
    r.add_term({e.first, static_cast<std::uint16_t>(e.second - 1)},
               ParamScalar(static_cast<long>(e.second)) * c);
  }
  return r;
}

UVPolynomial UVPolynomial::shift(int a, int b) const {
  UVPolynomial r;
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace(Exponents{static_cast<std::uint16_t>(e.first + a),
                               static_cast<std::uint16_t>(e.second + b)},
                     c);
  }
  return r;
}

UVPolynomial UVPolynomial::map_coefficients(
    const std::function<ParamScalar(const ParamScalar&)>& fn) const {
  UVPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
  return r;
}

std::string UVPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    detail::append_factor(mono, "u", it->first.first);
    detail::append_factor(mono, "v", it->first.second);
    detail::append_term(out, it->second, mono);
  }
  return out;
}

SuperElement uv_lift(const UVPolynomial& h) {
  // (x1 - x2)^i (x2 - x3)^j expanded with binomial coefficients.
  auto binomial_row = [](int n) {
    std::vector<long> row(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    }
    return row;
  };
  SuperElement result;
  for (const auto& [e, c] : h.terms()) {
    const int i = e.first;
    const int j = e.second;
    const auto bi = binomial_row(i);
    const auto bj = binomial_row(j);
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        long coefficient = bi[static_cast<std::size_t>(a)] * bj[static_cast<std::size_t>(b)];
        if ((i - a + j - b) & 1) coefficient = -coefficient;
        SuperMonomial m;
        m.x = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(i - a + b),
               static_cast<std::uint16_t>(j - b)};
        result.add_term(m, ParamScalar(coefficient) * c);
      }
    }
  }
  return result;
}

}  // namespace superbi
