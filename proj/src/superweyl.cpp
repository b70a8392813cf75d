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

#include "superbi/superweyl.hpp"

#include <array>
#include <vector>

#include "render.hpp"
#include "superbi/errors.hpp"

namespace superbi {

namespace {

struct FermionTerm {
  ThetaMask theta;
  ThetaMask dtheta;
  int coefficient;
};

struct FermionFactor {
  bool derivative;
  int index;
};

// Rewrites a product of theta/dtheta factors into sum of theta_A dtheta_B using
// dtheta_i theta_j = delta_ij - theta_j dtheta_i.
void normal_order(std::vector<FermionFactor> seq, int coefficient,
                  std::map<std::pair<ThetaMask, ThetaMask>, int>& out) {
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
    if (seq[p].derivative && !seq[p + 1].derivative) {
      if (seq[p].index == seq[p + 1].index) {
        auto contracted = seq;
        contracted.erase(contracted.begin() + static_cast<std::ptrdiff_t>(p),
                         contracted.begin() + static_cast<std::ptrdiff_t>(p + 2));
        normal_order(std::move(contracted), coefficient, out);
      }
      std::swap(seq[p], seq[p + 1]);
      normal_order(std::move(seq), -coefficient, out);
      return;
    }
  }
  grassmann::Signed thetas{0, 1};
  grassmann::Signed derivs{0, 1};
  for (const auto& f : seq) {
    auto& acc = f.derivative ? derivs : thetas;
    const grassmann::Signed next = grassmann::wedge(acc.mask, static_cast<ThetaMask>(1u << (f.index - 1)));
    if (next.sign == 0) return;
    acc = {next.mask, acc.sign * next.sign};
  }
  out[{thetas.mask, derivs.mask}] += coefficient * thetas.sign * derivs.sign;
}

using ReorderTable = std::array<std::array<std::vector<FermionTerm>, 8>, 8>;

// reorder_table()[T][U] is the normal form of dtheta_T theta_U.
const ReorderTable& reorder_table() {
  static const ReorderTable table = [] {
    ReorderTable t;
    for (int dm = 0; dm < 8; ++dm) {
      for (int tm = 0; tm < 8; ++tm) {
        std::vector<FermionFactor> seq;
        for (int i = 1; i <= 3; ++i) {
          if (dm & (1 << (i - 1))) seq.push_back({true, i});
        }
        for (int i = 1; i <= 3; ++i) {
          if (tm & (1 << (i - 1))) seq.push_back({false, i});
        }
        std::map<std::pair<ThetaMask, ThetaMask>, int> out;
        normal_order(seq, 1, out);
        for (const auto& [masks, c] : out) {
          if (c != 0) t[static_cast<std::size_t>(dm)][static_cast<std::size_t>(tm)].push_back({masks.first, masks.second, c});
        }
      }
    }
    return t;
  }();
  return table;
}

using DerivativeTable = std::array<std::array<grassmann::Signed, 8>, 8>;

// derivative_table()[T][M] is dtheta_T applied to theta_M (rightmost factor first).
const DerivativeTable& derivative_table() {
  static const DerivativeTable table = [] {
    DerivativeTable t{};
    for (int dm = 0; dm < 8; ++dm) {
      for (int m = 0; m < 8; ++m) {
        grassmann::Signed acc{static_cast<ThetaMask>(m), 1};
        for (int i = 3; i >= 1 && acc.sign != 0; --i) {
          if (!(dm & (1 << (i - 1)))) continue;
          const grassmann::Signed d = grassmann::left_derivative(i, acc.mask);
          acc = d.sign == 0 ? grassmann::Signed{} : grassmann::Signed{d.mask, acc.sign * d.sign};
        }
        t[static_cast<std::size_t>(dm)][static_cast<std::size_t>(m)] = acc;
      }
    }
    return t;
  }();
  return table;
}

long falling_factorial(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Least common denominator of a set of scalars, with numerators rescaled onto it.
class ClearedDenominators {
 public:
  template <typename Map>
  explicit ClearedDenominators(const Map& terms) {
    for (const auto& [key, c] : terms) {
      if (c.is_polynomial()) continue;
      bool seen = false;
      for (const auto& d : distinct_) seen = seen || d == c.den();
      if (seen) continue;
      distinct_.push_back(c.den());
      const ParamPolynomial g = poly_gcd(common_, c.den());
      common_ = *(common_ * c.den()).divide_exact(g);
    }
  }

  const ParamPolynomial& common() const noexcept { return common_; }

  ParamPolynomial numerator(const ParamScalar& c) const {
    if (common_.is_constant()) return c.num() * (Rational(1) / c.den().constant_term());
    return c.num() * *common_.divide_exact(c.den());
  }

 private:
  ParamPolynomial common_{1};
  std::vector<ParamPolynomial> distinct_;
};

template <typename Key>
void accumulate(std::map<Key, ParamPolynomial>& acc, const Key& key, const ParamPolynomial& p,
                const Rational& factor) {
  auto& slot = acc[key];
  for (const auto& [e, c] : p.terms()) slot.add_term(e, c * factor);
}

ParamScalar finish(const ParamPolynomial& numerator, const ParamPolynomial& denominator) {
  if (denominator.is_constant()) return ParamScalar(numerator);
  return ParamScalar::fraction(numerator, denominator);
}

void check_index(int i) {
  if (i < 1 || i > 3) throw InvalidArgument("variable index must be 1, 2 or 3");
}

}  // namespace

OperatorElement OperatorElement::scalar(const ParamScalar& c) { return word(NormalWord{}, c); }

OperatorElement OperatorElement::word(const NormalWord& w, const ParamScalar& c) {
  OperatorElement a;
  a.add_term(w, c);
  return a;
}

OperatorElement OperatorElement::x(int i) {
  check_index(i);
  NormalWord w;
  w.x[static_cast<std::size_t>(i - 1)] = 1;
  return word(w);
}

OperatorElement OperatorElement::theta(int i) {
  check_index(i);
  NormalWord w;
  w.theta = static_cast<ThetaMask>(1u << (i - 1));
  return word(w);
}

OperatorElement OperatorElement::dx(int i) {
  check_index(i);
  NormalWord w;
  w.dx[static_cast<std::size_t>(i - 1)] = 1;
  return word(w);
}

OperatorElement OperatorElement::dtheta(int i) {
  check_index(i);
  NormalWord w;
  w.dtheta = static_cast<ThetaMask>(1u << (i - 1));
  return word(w);
}

std::optional<int> OperatorElement::parity() const {
  std::optional<int> p;
  for (const auto& [w, c] : terms_) {
    if (p && *p != w.parity()) return std::nullopt;
    p = w.parity();
  }
  return p.value_or(0);
}

void OperatorElement::add_term(const NormalWord& w, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorElement OperatorElement::operator-() const {
  OperatorElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

OperatorElement& OperatorElement::operator+=(const OperatorElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

OperatorElement& OperatorElement::operator-=(const OperatorElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

OperatorElement operator*(const ParamScalar& c, const OperatorElement& a) {
  OperatorElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : a.terms_) r.terms_.emplace(w, c * v);
  return r;
}

OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
  OperatorElement result;
  if (a.is_zero() || b.is_zero()) return result;
  const ClearedDenominators da(a.terms_);
  const ClearedDenominators db(b.terms_);
  const auto& table = reorder_table();

  std::map<NormalWord, ParamPolynomial> acc;
  std::array<std::vector<std::pair<int, long>>, 3> contractions;
  for (const auto& [wa, ca] : a.terms_) {
    const ParamPolynomial pa = da.numerator(ca);
    for (const auto& [wb, cb] : b.terms_) {
      const auto& fermions = table[wa.dtheta][wb.theta];
      if (fermions.empty()) continue;
      // Leibniz: dx^n x^m = sum_k C(n,k) m!/(m-k)! x^{m-k} dx^{n-k}, per variable.
      for (std::size_t i = 0; i < 3; ++i) {
        contractions[i].clear();
        const long n = wa.dx[i];
        const long m = wb.x[i];
        for (long k = 0; k <= std::min(n, m); ++k) {
          contractions[i].emplace_back(static_cast<int>(k), binomial(n, k) * falling_factorial(m, k));
        }
      }
      const ParamPolynomial product = pa * db.numerator(cb);
      for (const auto& ft : fermions) {
        const grassmann::Signed st = grassmann::wedge(wa.theta, ft.theta);
        const grassmann::Signed sd = grassmann::wedge(ft.dtheta, wb.dtheta);
        if (st.sign == 0 || sd.sign == 0) continue;
        const int sign = ft.coefficient * st.sign * sd.sign;
        for (const auto& [k0, c0] : contractions[0]) {
          for (const auto& [k1, c1] : contractions[1]) {
            for (const auto& [k2, c2] : contractions[2]) {
              const std::array<int, 3> k{k0, k1, k2};
              NormalWord w;
              for (std::size_t i = 0; i < 3; ++i) {
                w.x[i] = static_cast<std::uint16_t>(wa.x[i] + wb.x[i] - k[i]);
                w.dx[i] = static_cast<std::uint16_t>(wa.dx[i] + wb.dx[i] - k[i]);
              }
              w.theta = st.mask;
              w.dtheta = sd.mask;
              Rational factor(sign);
              factor *= Rational(c0);
              factor *= Rational(c1);
              factor *= Rational(c2);
              accumulate(acc, w, product, factor);
            }
          }
        }
      }
    }
  }
  const ParamPolynomial denominator = da.common() * db.common();
  for (const auto& [w, p] : acc) {
    if (!p.is_zero()) result.terms_.emplace(w, finish(p, denominator));
  }
  return result;
}

OperatorElement OperatorElement::pow(unsigned exponent) const {
  OperatorElement r = identity();
  for (unsigned i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

OperatorElement OperatorElement::map_coefficients(
    const std::function<ParamScalar(const ParamScalar&)>& fn) const {
  OperatorElement r;
  for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
  return r;
}

std::string OperatorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string s;
    for (int i = 0; i < 3; ++i) detail::append_factor(s, "x" + std::to_string(i + 1), w.x[i]);
    for (int i = 0; i < 3; ++i) {
      if (w.theta & (1u << i)) detail::append_factor(s, "t" + std::to_string(i + 1), 1);
    }
    for (int i = 0; i < 3; ++i) detail::append_factor(s, "dx" + std::to_string(i + 1), w.dx[i]);
    for (int i = 0; i < 3; ++i) {
      if (w.dtheta & (1u << i)) detail::append_factor(s, "dt" + std::to_string(i + 1), 1);
    }
    detail::append_term(out, c, s);
  }
  return out;
}

SuperElement apply(const OperatorElement& op, const SuperElement& f) {
  SuperElement result;
  if (op.is_zero() || f.is_zero()) return result;
  const ClearedDenominators dop(op.terms());
  const ClearedDenominators df(f.terms());
  const auto& table = derivative_table();

  std::vector<std::pair<SuperMonomial, ParamPolynomial>> cleared;
  cleared.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) cleared.emplace_back(m, df.numerator(c));

  std::map<SuperMonomial, ParamPolynomial> acc;
  for (const auto& [w, cw] : op.terms()) {
    const ParamPolynomial pw = dop.numerator(cw);
    for (const auto& [m, pm] : cleared) {
      const grassmann::Signed d = table[w.dtheta][m.theta];
      if (d.sign == 0) continue;
      Rational factor(d.sign);
      bool vanishes = false;
      SuperMonomial out;
      for (std::size_t i = 0; i < 3 && !vanishes; ++i) {
        if (w.dx[i] > m.x[i]) {
          vanishes = true;
          break;
        }
        if (w.dx[i] != 0) factor *= Rational(falling_factorial(m.x[i], w.dx[i]));
        out.x[i] = static_cast<std::uint16_t>(m.x[i] - w.dx[i] + w.x[i]);
      }
      if (vanishes) continue;
      const grassmann::Signed s = grassmann::wedge(w.theta, d.mask);
      if (s.sign == 0) continue;
      out.theta = s.mask;
      if (s.sign < 0) factor = -factor;
      accumulate(acc, out, pw * pm, factor);
    }
  }
  const ParamPolynomial denominator = dop.common() * df.common();
  for (const auto& [m, p] : acc) {
    if (!p.is_zero()) result.add_term(m, finish(p, denominator));
  }
  return result;
}

OperatorElement normal_compose(const OperatorElement& a, const OperatorElement& b) { return a * b; }

OperatorElement bracket(const OperatorElement& a, const OperatorElement& b, BracketKind kind) {
  switch (kind) {
    case BracketKind::commutator: return a * b - b * a;
    case BracketKind::anticommutator: return a * b + b * a;
    case BracketKind::super: {
      const auto pa = a.parity();
      const auto pb = b.parity();
      if (!pa || !pb) throw InvalidArgument("super bracket needs parity-homogeneous operands");
      return (*pa & *pb) ? a * b + b * a : a * b - b * a;
    }
  }
  throw InvalidArgument("unknown bracket kind");
}

}  // namespace superbi
