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

#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <stdexcept>
#include <string>

#include "scg/projection.hpp"

// Node centralities over a directed simple graph given as out-adjacency.
// Scores measure importance through incoming links.
namespace scg::centrality {

// A(i, j) = 1 for every edge i -> j.
using SparseMatrix = Eigen::SparseMatrix<double>;
SparseMatrix adjacency_matrix(const Adjacency& out);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string metric, int iterations);
  const std::string& metric() const { return metric_; }

 private:
  std::string metric_;
};

struct IterationOptions {
  double tolerance = 1e-8;
  int max_iterations = 200;
};

// Largest eigenvalue modulus of A, computed per strongly connected
// component. Exact 0 for acyclic graphs.
struct SpectralRadius {
  double value = 0;
  bool converged = true;  // false: value is an upper bound
};
SpectralRadius spectral_radius(const Adjacency& out);

// Uniform teleport, dangling mass spread uniformly. Stops once the L1 error
// bound of the iterate drops below the tolerance. Sums to 1.
Eigen::VectorXd pagerank(const Adjacency& out, double damping = 0.85,
                         IterationOptions options = {});

inline constexpr double kEigenvectorTeleport = 1e-6;

struct EigenvectorResult {
  Eigen::VectorXd scores;  // unit L2 norm, non-negative
  // Set when the power iteration could not be used (acyclic graph, or no
  // convergence) and the scores are the Perron vector of
  // A^T + (kEigenvectorTeleport / n) J instead.
  bool teleport_fallback = false;
};
EigenvectorResult eigenvector(const Adjacency& out,
                              IterationOptions options = {1e-10, 1000});

struct KatzResult {
  Eigen::VectorXd scores;  // unit L2 norm
  double alpha = 0;
  SpectralRadius radius;
};
// x = alpha A^T x + beta 1 with alpha = attenuation / max(rho, 1), solved
// directly.
KatzResult katz(const Adjacency& out, double attenuation = 0.9, double beta = 1.0);

// Shortest directed paths through each node, endpoints excluded, not
// normalized.
Eigen::VectorXd betweenness(const Adjacency& out);

// (1 / (n - 1)) * sum over u != v of 1 / d(u, v), distances measured from u
// to v. 0 for graphs with fewer than two nodes.
Eigen::VectorXd harmonic(const Adjacency& out);

}  // namespace scg::centrality
