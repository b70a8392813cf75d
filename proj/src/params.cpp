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

#include "superbi/params.hpp"

#include <algorithm>
#include <sstream>

#include "superbi/errors.hpp"

namespace superbi {

Params Params::symbolic() {
  Params p;
  for (int i = 0; i < 3; ++i) p.nu_[static_cast<std::size_t>(i)] = ParamScalar::nu(i);
  return p;
}

Params Params::at(const ParamPoint& point) {
  Params p;
  for (std::size_t i = 0; i < 3; ++i) p.nu_[i] = ParamScalar(point[i]);
  p.point_ = point;
  return p;
}

const ParamScalar& Params::nu(int j) const {
  if (j < 1 || j > 3) throw InvalidArgument("parameter index must be 1, 2 or 3");
  return nu_[static_cast<std::size_t>(j - 1)];
}

ParamScalar Params::nu_sum(int digits) const {
  ParamScalar s;
  for (; digits > 0; digits /= 10) s += nu(digits % 10);
  return s;
}

ParamScalar Params::bind(const ParamScalar& symbolic_value) const {
  if (!point_) return symbolic_value;
  return ParamScalar(symbolic_value.evaluate(*point_));
}

std::string Params::describe() const {
  if (!point_) return "symbolic";
  std::ostringstream os;
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? "," : "") << "nu" << i + 1 << "=" << (*point_)[i].to_string();
  }
  return os.str();
}

ParamPoint parse_param_point(const std::string& text) {
  std::array<std::optional<Rational>, 3> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 3 || item.compare(0, 2, "nu") != 0 || item[2] < '1' ||
        item[2] > '3') {
      throw InvalidArgument("expected nu1=r,nu2=r,nu3=r but got '" + text + "'");
    }
    auto& slot = values[static_cast<std::size_t>(item[2] - '1')];
    if (slot) throw InvalidArgument("parameter " + item.substr(0, 3) + " given twice");
    slot = Rational::parse(item.substr(eq + 1));
  }
  ParamPoint point;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!values[i]) throw InvalidArgument("missing value for nu" + std::to_string(i + 1));
    point[i] = *values[i];
  }
  return point;
}

void GenericPointSampler::avoid(const ParamPolynomial& p) {
  if (p.is_constant()) return;
  const ParamPolynomial normalized = split_unit(p).second;
  if (std::find(avoid_.begin(), avoid_.end(), normalized) == avoid_.end()) {
    avoid_.push_back(normalized);
  }
}

ParamPoint GenericPointSampler::sample() {
  static constexpr std::array<long, 25> kPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  std::uniform_int_distribution<long> numerator(-97, 97);
  std::uniform_int_distribution<std::size_t> prime(0, kPrimes.size() - 1);
  while (true) {
    ParamPoint point;
    for (auto& coordinate : point) coordinate = Rational(numerator(rng_), kPrimes[prime(rng_)]);
    const bool degenerate = std::any_of(avoid_.begin(), avoid_.end(), [&](const auto& p) {
      return p.evaluate(point).is_zero();
    });
    if (!degenerate) return point;
  }
}

std::vector<ParamPolynomial> degeneracy_loci(int max_n) {
  const ParamPolynomial n1 = ParamPolynomial::variable(0);
  const ParamPolynomial n2 = ParamPolynomial::variable(1);
  const ParamPolynomial n3 = ParamPolynomial::variable(2);
  const ParamPolynomial n12 = n1 + n2;
  std::vector<ParamPolynomial> loci{n1, n2, n3, n12, n1 - n2, n1 + n2 + n3};
  for (int m = -2 * max_n - 2; m <= 2 * max_n + 2; ++m) {
    const ParamPolynomial c(static_cast<long>(m));
    loci.push_back(n12 + c);
    loci.push_back(n12 * Rational(2) + c);
    loci.push_back(n1 * Rational(2) + c);
    loci.push_back(n2 * Rational(2) + c);
    loci.push_back(n3 * Rational(2) + c);
    loci.push_back((n1 + n2 + n3) * Rational(2) + c);
    loci.push_back(n12 * Rational(2) + n3 * Rational(4) + c);
    loci.push_back(n12 + n3 * Rational(2) + c);
  }
  return loci;
}

}  // namespace superbi
