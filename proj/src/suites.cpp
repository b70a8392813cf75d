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

#include "superbi/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "superbi/eigenbasis.hpp"
#include "superbi/errors.hpp"
#include "superbi/jacobi.hpp"
#include "superbi/kernel.hpp"
#include "superbi/osp_model.hpp"

namespace superbi {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"osp",  "bannai-ito", "kernel",     "actions",
                                                 "eigen", "tridiag",   "jacobi",     "oracle",
                                                 "evaluation", "all"};
  return names;
}

namespace {

using Task = std::function<VerificationReport()>;

// Runs tasks on a small pool and merges the reports in task order.
VerificationReport run_tasks(const std::string& suite, const std::string& mode,
                             const std::vector<Task>& tasks, unsigned threads) {
  std::vector<std::optional<VerificationReport>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  VerificationReport report(suite, mode);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i]) {
      report.merge(*results[i]);
    } else {
      report.add({"task" + std::to_string(i) + ".error", "task completes", CheckStatus::fail, 1,
                  errors[i], 0});
    }
  }
  report.sort();
  return report;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ParamScalar random_coefficient(std::mt19937_64& rng, const Params& params) {
  long num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  const ParamScalar c(Rational(num, uniform(rng, 1, 5)));
  switch (uniform(rng, 0, 3)) {
    case 0: return c;
    case 1: return c * params.nu(static_cast<int>(uniform(rng, 1, 3)));
    default: return c + params.nu(static_cast<int>(uniform(rng, 1, 3)));
  }
}

std::uint16_t small(std::mt19937_64& rng, long hi) { return static_cast<std::uint16_t>(uniform(rng, 0, hi)); }

std::pair<std::size_t, std::string> element_residual(const SuperElement& r) {
  if (r.is_zero()) return {0, {}};
  return {r.term_count(), r.to_string()};
}

std::pair<std::size_t, std::string> operator_difference(const OperatorElement& r) {
  if (r.is_zero()) return {0, {}};
  return {r.term_count(), r.to_string()};
}

std::string monomial_name(int a, int b) {
  return "u" + std::to_string(a) + "v" + std::to_string(b);
}

std::string pad(int i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

VerificationReport kernel_suite(const SuiteOptions& o, const Params& params) {
  VerificationReport report("kernel", params.describe());
  const int embed_degree = std::min(o.max_degree, 6);
  for (EmbeddingKind kind : {EmbeddingKind::o1, EmbeddingKind::o2, EmbeddingKind::e1,
                             EmbeddingKind::e2}) {
    for (int a = 0; a <= embed_degree; ++a) {
      for (int b = 0; a + b <= embed_degree; ++b) {
        report.run("embed." + to_string(kind) + "." + monomial_name(a, b),
                   "A-^(123) " + to_string(kind) + "(u^a v^b) = 0", [&] {
                     const UVPolynomial h = UVPolynomial::monomial(ParamScalar(1), a, b);
                     return element_residual(apply(total_lowering(), embed(kind, h)));
                   });
      }
    }
  }
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.kernel_samples; ++i) {
    KernelComponents q{random_uv(rng, params, 6), random_uv(rng, params, 6),
                       random_uv(rng, params, 6), random_uv(rng, params, 6)};
    report.run("roundtrip." + pad(i), "F = O1(h1) + O2(h2) + E1(g1) + E2(g2) lies in the kernel and decomposes back",
               [&]() -> std::pair<std::size_t, std::string> {
                 const SuperElement f = q.assemble();
                 const SuperElement image = apply(total_lowering(), f);
                 if (!image.is_zero()) return {image.term_count(), "A-^(123) F = " + image.to_string()};
                 const KernelComponents back = kernel_decompose(f);
                 if (back == q) return {0, {}};
                 return {1, "recovered h1=" + back.h1.to_string() + " h2=" + back.h2.to_string() +
                                " g1=" + back.g1.to_string() + " g2=" + back.g2.to_string()};
               });
  }
  report.run("decompose.theta1_rejected", "theta1 is not in the kernel: A-^(123) theta1 = 1",
             [&]() -> std::pair<std::size_t, std::string> {
               try {
                 kernel_decompose(SuperElement::theta(1));
               } catch (const NotInKernel& e) {
                 if (e.image() == SuperElement::constant(ParamScalar(1))) return {0, {}};
                 return {1, "wrong image " + e.image().to_string()};
               }
               return {1, "accepted theta1"};
             });
  return report;
}

VerificationReport eigen_suite(int max_n, const SuiteOptions& o, const Params& params) {
  std::vector<Task> tasks;
  for (int n = 0; n <= max_n; ++n) {
    for (Subspace s : {Subspace::odd, Subspace::even}) {
      for (const EigenLabel& l : basis_labels(s, n)) {
        tasks.emplace_back([l, &params] { return verify_eigenpair(l, params); });
      }
      tasks.emplace_back([s, n, &params] {
        VerificationReport r("eigen", params.describe());
        const std::size_t expected = s == Subspace::odd ? 2 * (n + 1) : 2 * n + 1;
        r.run("rank." + to_string(s) + ".N" + std::to_string(n),
              s == Subspace::odd ? "rank {f+-_{k,N}} = 2(N+1)" : "rank {f+-_{k,N}} = 2N+1",
              [&]() -> std::pair<std::size_t, std::string> {
                const std::size_t got = basis_rank(s, n, params);
                if (got == expected) return {0, {}};
                return {1, "rank " + std::to_string(got) + ", expected " + std::to_string(expected)};
              });
        return r;
      });
    }
  }
  tasks.emplace_back([max_n, &params] { return verify_component_formulas(std::min(max_n, 5), params); });
  return run_tasks("eigen", params.describe(), tasks, o.threads);
}

VerificationReport tridiag_suite(int max_n, const SuiteOptions& o, const Params& params) {
  std::vector<Task> tasks;
  for (int n = max_n; n >= 0; --n) {
    for (Subspace s : {Subspace::odd, Subspace::even}) {
      tasks.emplace_back([s, n, &params] {
        return verify_tridiagonal(tridiagonal_matrix(s, n, params), params);
      });
    }
  }
  return run_tasks("tridiag", params.describe(), tasks, o.threads);
}

VerificationReport rename(VerificationReport r, const std::string& suite) {
  VerificationReport out(suite, r.parameter_mode());
  out.merge(r);
  out.sort();
  return out;
}

void check_options(const SuiteOptions& o) {
  if (o.max_degree < 2 || o.max_degree > 12) {
    throw InvalidArgument("max-degree must be between 2 and 12");
  }
  if (o.max_n && (*o.max_n < 0 || *o.max_n > 8)) {
    throw InvalidArgument("max-N must be between 0 and 8");
  }
  if (o.kernel_samples < 1 || o.oracle_pairs < 1) {
    throw InvalidArgument("sample counts must be positive");
  }
}

VerificationReport run_single(const std::string& name, const SuiteOptions& o) {
  const Params params = o.params ? Params::at(*o.params) : Params::symbolic();
  const std::string mode = params.describe();
  if (name == "osp") {
    VerificationReport r("osp", mode);
    r.merge(check_fundamental_relations(params));
    r.merge(check_centrality(params));
    r.sort();
    return r;
  }
  if (name == "bannai-ito") return rename(check_bannai_ito(params), "bannai-ito");
  if (name == "kernel") return rename(kernel_suite(o, params), "kernel");
  if (name == "actions") return rename(check_action_identities(o.max_degree, params), "actions");
  if (name == "eigen") return eigen_suite(o.max_n.value_or(6), o, params);
  if (name == "tridiag") return tridiag_suite(o.max_n.value_or(5), o, params);
  if (name == "jacobi") return rename(verify_jacobi_identities(o.max_n.value_or(6), params), "jacobi");
  if (name == "oracle") return rename(check_compose_apply(o.oracle_pairs, o.seed, params), "oracle");
  if (name == "evaluation") {
    const int max_n = std::min(o.max_n.value_or(3), 5);
    const ParamPoint point = o.params ? *o.params : generic_point(o.seed, max_n);
    return rename(check_evaluation_agreement(point, max_n), "evaluation");
  }
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  check_options(options);
  if (name != "all") return run_single(name, options);
  const Params params = options.params ? Params::at(*options.params) : Params::symbolic();
  VerificationReport report("all", params.describe());
  for (const std::string& s : suite_names()) {
    if (s != "all") report.merge_prefixed(run_single(s, options));
  }
  return report;
}

OperatorElement random_operator(std::mt19937_64& rng, const Params& params) {
  OperatorElement op;
  const long words = uniform(rng, 1, 3);
  for (long w = 0; w < words; ++w) {
    NormalWord word;
    for (int i = 0; i < 3; ++i) {
      word.x[static_cast<std::size_t>(i)] = small(rng, uniform(rng, 0, 3) == 0 ? 2 : 1);
      word.dx[static_cast<std::size_t>(i)] = small(rng, uniform(rng, 0, 3) == 0 ? 2 : 1);
    }
    word.theta = static_cast<ThetaMask>(uniform(rng, 0, 7));
    word.dtheta = static_cast<ThetaMask>(uniform(rng, 0, 7));
    op += OperatorElement::word(word, random_coefficient(rng, params));
  }
  return op;
}

SuperElement random_element(std::mt19937_64& rng, const Params& params) {
  SuperElement f;
  const long terms = uniform(rng, 1, 5);
  for (long t = 0; t < terms; ++t) {
    SuperMonomial m;
    int budget = static_cast<int>(uniform(rng, 0, 4));
    for (std::size_t i = 0; i < 3 && budget > 0; ++i) {
      const int e = static_cast<int>(uniform(rng, 0, budget));
      m.x[i] = static_cast<std::uint16_t>(e);
      budget -= e;
    }
    m.theta = static_cast<ThetaMask>(uniform(rng, 0, 7));
    f.add_term(m, random_coefficient(rng, params));
  }
  return f;
}

UVPolynomial random_uv(std::mt19937_64& rng, const Params& params, int max_degree) {
  UVPolynomial h;
  const int degree = static_cast<int>(uniform(rng, 0, max_degree));
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      if (uniform(rng, 0, 2) == 0) {
        h.add_term({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)},
                   random_coefficient(rng, params));
      }
    }
  }
  return h;
}

VerificationReport check_compose_apply(int pairs, std::uint64_t seed, const Params& params) {
  VerificationReport report("oracle", params.describe());
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const OperatorElement a = random_operator(rng, params);
    const OperatorElement b = random_operator(rng, params);
    const SuperElement f = random_element(rng, params);
    report.run("pair." + pad(i), "apply(a b, f) = apply(a, apply(b, f))", [&] {
      return element_residual(apply(a * b, f) - apply(a, apply(b, f)));
    });
  }
  return report;
}

ParamPoint generic_point(std::uint64_t seed, int max_n) {
  GenericPointSampler sampler(seed);
  for (const ParamPolynomial& p : degeneracy_loci(std::max(max_n, 8))) sampler.avoid(p);
  return sampler.sample();
}

VerificationReport check_evaluation_agreement(const ParamPoint& point, int max_n) {
  const Params symbolic = Params::symbolic();
  const Params bound = Params::at(point);
  VerificationReport report("evaluation", bound.describe());
  auto at_point = [&](const ParamScalar& c) { return ParamScalar(scalar_eval(c, point)); };
  for (const SubsetLabel& s : SubsetLabel::all()) {
    report.run("casimir.Q" + s.to_string(), "eval(Q^(S) symbolic) = Q^(S) at the point", [&] {
      return operator_difference(casimir(s, symbolic).map_coefficients(at_point) -
                                 casimir(s, bound));
    });
  }
  for (int n = 0; n <= max_n; ++n) {
    for (Subspace sub : {Subspace::odd, Subspace::even}) {
      for (const EigenLabel& l : basis_labels(sub, n)) {
        const std::string id = "eigenvector." + to_string(sub) + to_string(l.sign) + ".N" +
                               std::to_string(n) + ".k" + std::to_string(l.k);
        report.run(id, "eval(f symbolic) = f at the point", [&] {
          return element_residual(build_eigenvector(l, symbolic).map_coefficients(at_point) -
                                  build_eigenvector(l, bound));
        });
      }
      report.run("tridiag." + to_string(sub) + ".N" + std::to_string(n),
                 "eval(Q23 matrix symbolic) = Q23 matrix at the point",
                 [&]() -> std::pair<std::size_t, std::string> {
                   const TridiagonalMatrix a = tridiagonal_matrix(sub, n, symbolic);
                   const TridiagonalMatrix b = tridiagonal_matrix(sub, n, bound);
                   std::size_t bad = 0;
                   std::string out;
                   for (std::size_t i = 0; i < a.basis.size(); ++i) {
                     for (std::size_t j = 0; j < a.basis.size(); ++j) {
                       const ParamScalar x = at_point(a.entries(i, j));
                       if (x == b.entries(i, j)) continue;
                       ++bad;
                       out += "(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                              x.to_string() + " vs " + b.entries(i, j).to_string() + "; ";
                     }
                   }
                   return std::pair{bad, out};
                 });
    }
  }
  return report;
}

}  // namespace superbi
