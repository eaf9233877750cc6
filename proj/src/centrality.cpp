// Copyright 2026 The scg Authors
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

#include "scg/centrality.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <vector>

namespace scg::centrality {
namespace {

using Eigen::VectorXd;

// Transposed adjacency: row v holds the in-neighbours of v.
SparseMatrix incoming_matrix(const Adjacency& out) {
  return adjacency_matrix(out).transpose();
}

SparseMatrix identity(Eigen::Index n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

// Strongly connected components, iterative Tarjan.
std::vector<std::vector<std::size_t>> strong_components(const Adjacency& out) {
  const std::size_t n = out.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // node, next child
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      if (child < out[v].size()) {
        std::size_t w = out[v][child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

// Perron radius of one irreducible block. Shifted power iteration; the
// Collatz-Wielandt quotients bracket the radius at every step.
SpectralRadius component_radius(const Adjacency& out, const std::vector<std::size_t>& members) {
  const Eigen::Index k = static_cast<Eigen::Index>(members.size());
  std::vector<Eigen::Index> local(out.size(), -1);
  for (Eigen::Index i = 0; i < k; ++i) local[members[static_cast<std::size_t>(i)]] = i;
  std::vector<Eigen::Triplet<double>> entries;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (std::size_t w : out[members[static_cast<std::size_t>(i)]]) {
      if (local[w] >= 0) entries.emplace_back(i, local[w], 1.0);
    }
  }
  SparseMatrix block(k, k);
  block.setFromTriplets(entries.begin(), entries.end());

  constexpr int kMaxIterations = 20000;
  VectorXd x = VectorXd::Ones(k);
  double upper = 0;
  for (int it = 0; it < kMaxIterations; ++it) {
    VectorXd y = block * x;
    VectorXd ratio = y.cwiseQuotient(x);
    double lower = ratio.minCoeff();
    upper = ratio.maxCoeff();
    if (upper - lower <= 1e-13 * upper) return {0.5 * (lower + upper), true};
    x += y;
    x /= x.maxCoeff();
  }
  return {upper, false};
}

std::optional<VectorXd> resolvent_ones(Eigen::SparseLU<SparseMatrix>& lu, const SparseMatrix& incoming,
                                       double lambda) {
  const Eigen::Index n = incoming.rows();
  SparseMatrix k = lambda * identity(n) - incoming;
  lu.factorize(k);
  if (lu.info() != Eigen::Success) return std::nullopt;
  VectorXd x = lu.solve(VectorXd::Ones(n));
  if (lu.info() != Eigen::Success || !x.allFinite() || (x.array() <= 0).any()) return std::nullopt;
  return x;
}

// Perron vector of incoming + c J with c = teleport / n. It is proportional
// to (lambda I - incoming)^-1 1 where lambda solves c 1^T x(lambda) = 1, and
// x(lambda) is positive exactly when lambda exceeds the radius of incoming.
VectorXd teleport_perron(const SparseMatrix& incoming, std::size_t max_degree) {
  const Eigen::Index n = incoming.rows();
  const double c = kEigenvectorTeleport / static_cast<double>(n);
  Eigen::SparseLU<SparseMatrix> lu;
  lu.analyzePattern(identity(n) - incoming);
  double lo = 0;
  double hi = static_cast<double>(max_degree) + 1;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    auto x = resolvent_ones(lu, incoming, mid);
    if (!x || c * x->sum() > 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  auto x = resolvent_ones(lu, incoming, hi);
  if (!x) throw ConvergenceError("eigenvector", 400);
  return x->normalized();
}

}  // namespace

ConvergenceError::ConvergenceError(std::string metric, int iterations)
    : std::runtime_error(metric + " centrality did not converge within " +
                         std::to_string(iterations) + " iterations"),
      metric_(std::move(metric)) {}

SparseMatrix adjacency_matrix(const Adjacency& out) {
  const auto n = static_cast<Eigen::Index>(out.size());
  std::vector<Eigen::Triplet<double>> entries;
  for (std::size_t u = 0; u < out.size(); ++u) {
    for (std::size_t v : out[u]) {
      entries.emplace_back(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v), 1.0);
    }
  }
  SparseMatrix a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

SpectralRadius spectral_radius(const Adjacency& out) {
  SpectralRadius result;
  for (const auto& component : strong_components(out)) {
    if (component.size() < 2) continue;  // no self loops, so radius 0
    SpectralRadius r = component_radius(out, component);
    if (r.value > result.value) result.value = r.value;
    result.converged = result.converged && r.converged;
  }
  return result;
}

VectorXd pagerank(const Adjacency& out, double damping, IterationOptions options) {
  const auto n = static_cast<Eigen::Index>(out.size());
  if (n == 0) return {};
  std::vector<Eigen::Triplet<double>> entries;
  VectorXd dangling = VectorXd::Zero(n);
  for (std::size_t u = 0; u < out.size(); ++u) {
    if (out[u].empty()) dangling[static_cast<Eigen::Index>(u)] = 1;
    for (std::size_t v : out[u]) {
      entries.emplace_back(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u),
                           1.0 / static_cast<double>(out[u].size()));
    }
  }
  SparseMatrix transition(n, n);
  transition.setFromTriplets(entries.begin(), entries.end());

  // The iteration contracts by the damping factor in L1, so the distance to the fixed
  // point is at most damping / (1 - damping) times the last step.
  const double bound = damping / (1 - damping);
  VectorXd x = VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < options.max_iterations; ++it) {
    const double spread = (damping * dangling.dot(x) + (1 - damping)) / static_cast<double>(n);
    VectorXd next = damping * (transition * x);
    next.array() += spread;
    const double step = (next - x).lpNorm<1>();
    x = std::move(next);
    if (step * bound < options.tolerance) return x;
  }
  throw ConvergenceError("pagerank", options.max_iterations);
}

EigenvectorResult eigenvector(const Adjacency& out, IterationOptions options) {
  const auto n = static_cast<Eigen::Index>(out.size());
  if (n == 0) return {};
  const SparseMatrix incoming = incoming_matrix(out);
  std::size_t max_degree = 0;
  for (Eigen::Index v = 0; v < n; ++v) {
    max_degree = std::max<std::size_t>(
        {max_degree, out[static_cast<std::size_t>(v)].size(),
         static_cast<std::size_t>(incoming.innerVector(v).nonZeros())});
  }

  if (spectral_radius(out).value > 0) {
    // Shifting by the identity keeps the iteration from cycling on periodic
    // graphs without moving the eigenvector.
    VectorXd x = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < options.max_iterations; ++it) {
      VectorXd next = x + incoming * x;
      next.normalize();
      const double step = (next - x).lpNorm<1>();
      x = std::move(next);
      if (step < options.tolerance) return {x, false};
    }
  }
  return {teleport_perron(incoming, max_degree), true};
}

KatzResult katz(const Adjacency& out, double attenuation, double beta) {
  KatzResult result;
  result.radius = spectral_radius(out);
  result.alpha = attenuation / std::max(result.radius.value, 1.0);
  const auto n = static_cast<Eigen::Index>(out.size());
  if (n == 0) return result;
  SparseMatrix system = identity(n) - result.alpha * incoming_matrix(out);
  Eigen::SparseLU<SparseMatrix> lu;
  lu.compute(system);
  if (lu.info() != Eigen::Success) throw ConvergenceError("katz", 0);
  result.scores = lu.solve(VectorXd::Constant(n, beta)).normalized();
  return result;
}

VectorXd betweenness(const Adjacency& out) {
  const std::size_t n = out.size();
  VectorXd score = VectorXd::Zero(static_cast<Eigen::Index>(n));
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<long long> dist(n);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t v = 0; v < n; ++v) preds[v].clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1;
    dist[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      order.push_back(v);
      for (std::size_t w : out[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::size_t w = *it;
      for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1 + delta[w]);
      if (w != s) score[static_cast<Eigen::Index>(w)] += delta[w];
    }
  }
  return score;
}

VectorXd harmonic(const Adjacency& out) {
  const std::size_t n = out.size();
  VectorXd score = VectorXd::Zero(static_cast<Eigen::Index>(n));
  if (n < 2) return score;
  std::vector<long long> dist(n);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t v = queue[head];
      for (std::size_t w : out[v]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        score[static_cast<Eigen::Index>(w)] += 1.0 / static_cast<double>(dist[w]);
        queue.push_back(w);
      }
    }
  }
  return score / static_cast<double>(n - 1);
}

}  // namespace scg::centrality
