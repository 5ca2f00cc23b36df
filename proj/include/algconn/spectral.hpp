// Copyright 2026 The algconn Authors.
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

#ifndef ALGCONN_SPECTRAL_HPP_
#define ALGCONN_SPECTRAL_HPP_

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

// Dense symmetric matrix, full row-major storage. set() writes both (i, j)
// and (j, i), so the stored entries are exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  static SymMatrix Identity(int n);
  static SymMatrix Diagonal(std::initializer_list<double> diag);
  // Takes the upper triangle of `rows` and mirrors it. Throws
  // std::invalid_argument when `rows` is not square or not symmetric.
  static SymMatrix FromRows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[Index(i, j)]; }
  void set(int i, int j, double value) {
    a_[Index(i, j)] = value;
    a_[Index(j, i)] = value;
  }

  double Trace() const;
  // Max absolute row sum.
  double NormInf() const;
  double NormFrobenius() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> a_;
};

// alpha * a + beta * b. Sizes must match.
SymMatrix LinearCombination(double alpha, const SymMatrix& a, double beta,
                            const SymMatrix& b);

// L(G) = D - A.
SymMatrix Laplacian(const Graph& g);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm is at most
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

struct SpectralSummary {
  // Ascending.
  std::vector<double> eigenvalues;
  // Column k (entry eigenvectors[i * n + k]) is the unit eigenvector of
  // eigenvalues[k].
  std::vector<double> eigenvectors;
  // max_k ||A v_k - lambda_k v_k||_inf.
  double residual = 0.0;
  // max |Q^T Q - I|.
  double orthogonality_error = 0.0;
  int sweeps = 0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double eigenvector(int i, int k) const {
    return eigenvectors[static_cast<size_t>(i) * eigenvalues.size() + k];
  }
  // Second smallest eigenvalue. Throws std::domain_error for n < 2.
  double lambda2() const;
};

// Full eigendecomposition by row-cyclic Jacobi rotations. Throws
// ConvergenceError if the sweep cap is reached before the tolerance.
SpectralSummary EigenDecompose(const SymMatrix& a, JacobiOptions options = {});

// Algebraic connectivity. Throws std::domain_error for n < 2.
double AlgebraicConnectivity(const Graph& g);

enum class Verdict { kPsd, kNotPsd };

struct CertificateResult {
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kPsd;

  bool psd() const { return verdict == Verdict::kPsd; }
};

// 1e-8 * max(1, ||A||_inf).
double DefaultPsdTolerance(const SymMatrix& a);

// PSD iff the minimum eigenvalue is >= -tol. Throws std::invalid_argument for
// a negative tolerance.
CertificateResult IsPsd(const SymMatrix& a, double tol);
CertificateResult IsPsd(const SymMatrix& a);

std::string_view VerdictName(Verdict v);

// Every EigenDecompose call on this thread reports to the innermost live
// observer. Used by verification harnesses to audit the numerics of each
// decomposition without threading summaries through every API.
class ScopedDecompositionObserver {
 public:
  using Callback =
      std::function<void(const SymMatrix&, const SpectralSummary&)>;

  explicit ScopedDecompositionObserver(Callback callback);
  ~ScopedDecompositionObserver();

  ScopedDecompositionObserver(const ScopedDecompositionObserver&) = delete;
  ScopedDecompositionObserver& operator=(const ScopedDecompositionObserver&) =
      delete;

 private:
  Callback callback_;
  ScopedDecompositionObserver* previous_;

  friend SpectralSummary EigenDecompose(const SymMatrix&, JacobiOptions);
};

}  // namespace algconn

#endif  // ALGCONN_SPECTRAL_HPP_
