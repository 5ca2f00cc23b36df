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

#include "algconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace algconn {

SymMatrix SymMatrix::Identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::Diagonal(std::initializer_list<double> diag) {
  SymMatrix m(static_cast<int>(diag.size()));
  int i = 0;
  for (double d : diag) {
    m.set(i, i, d);
    ++i;
  }
  return m;
}

SymMatrix SymMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("matrix rows must form a square");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("matrix is not symmetric");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

double SymMatrix::Trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::NormInf() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double SymMatrix::NormFrobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

SymMatrix LinearCombination(double alpha, const SymMatrix& a, double beta,
                            const SymMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matrix sizes differ");
  }
  const int n = a.size();
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out.set(i, j, alpha * a(i, j) + beta * b(i, j));
  }
  return out;
}

SymMatrix Laplacian(const Graph& g) {
  const int n = g.num_nodes();
  SymMatrix l(n);
  for (int u = 0; u < n; ++u) {
    l.set(u, u, static_cast<double>(g.degree(u)));
    for (int v : g.neighbors(u)) {
      if (u < v) l.set(u, v, -1.0);
    }
  }
  return l;
}

double SpectralSummary::lambda2() const {
  if (eigenvalues.size() < 2) {
    throw std::domain_error(
        "algebraic connectivity undefined for fewer than two nodes");
  }
  return eigenvalues[1];
}

namespace {

thread_local ScopedDecompositionObserver* g_observer = nullptr;

// Row-major n x n scratch buffer.
struct Dense {
  int n;
  std::vector<double> v;

  explicit Dense(int size) : n(size), v(static_cast<size_t>(size) * size) {}
  double& operator()(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const {
    return v[static_cast<size_t>(i) * n + j];
  }
};

double OffDiagonalNorm(const Dense& a) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// Applies the rotation that annihilates a(p, q): a <- J^T a J, q <- q J.
void Rotate(Dense& a, Dense& vecs, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = a.n;
  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int k = 0; k < n; ++k) {
    const double vkp = vecs(k, p);
    const double vkq = vecs(k, q);
    vecs(k, p) = c * vkp - s * vkq;
    vecs(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SpectralSummary EigenDecompose(const SymMatrix& input, JacobiOptions options) {
  const int n = input.size();
  if (n < 1) throw std::invalid_argument("cannot decompose an empty matrix");

  Dense a(n);
  Dense vecs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = input(i, j);
    vecs(i, i) = 1.0;
  }

  const double threshold = options.relative_tolerance * input.NormFrobenius();
  int sweeps = 0;
  while (OffDiagonalNorm(a) > threshold) {
    if (sweeps == options.max_sweeps) {
      throw ConvergenceError(
          "Jacobi eigensolver did not converge in " +
          std::to_string(options.max_sweeps) + " sweeps (n = " +
          std::to_string(n) + ", off-diagonal norm " +
          std::to_string(OffDiagonalNorm(a)) + ", target " +
          std::to_string(threshold) + ")");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) Rotate(a, vecs, p, q);
    }
    ++sweeps;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a(x, x) < a(y, y); });

  SpectralSummary out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (int i = 0; i < n; ++i) {
      out.eigenvectors[static_cast<size_t>(i) * n + k] = vecs(i, order[k]);
    }
  }

  for (int k = 0; k < n; ++k) {
    const double lambda = out.eigenvalues[k];
    for (int i = 0; i < n; ++i) {
      double av = 0.0;
      for (int j = 0; j < n; ++j) av += input(i, j) * out.eigenvector(j, k);
      out.residual =
          std::max(out.residual, std::abs(av - lambda * out.eigenvector(i, k)));
    }
    for (int l = k; l < n; ++l) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) {
        dot += out.eigenvector(i, k) * out.eigenvector(i, l);
      }
      const double expected = k == l ? 1.0 : 0.0;
      out.orthogonality_error =
          std::max(out.orthogonality_error, std::abs(dot - expected));
    }
  }

  if (g_observer != nullptr) g_observer->callback_(input, out);
  return out;
}

double AlgebraicConnectivity(const Graph& g) {
  if (g.num_nodes() < 2) {
    throw std::domain_error(
        "algebraic connectivity undefined for fewer than two nodes");
  }
  return EigenDecompose(Laplacian(g)).lambda2();
}

double DefaultPsdTolerance(const SymMatrix& a) {
  return 1e-8 * std::max(1.0, a.NormInf());
}

CertificateResult IsPsd(const SymMatrix& a, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  CertificateResult result;
  result.min_eigenvalue = EigenDecompose(a).eigenvalues.front();
  result.tolerance = tol;
  result.verdict =
      result.min_eigenvalue >= -tol ? Verdict::kPsd : Verdict::kNotPsd;
  return result;
}

CertificateResult IsPsd(const SymMatrix& a) {
  return IsPsd(a, DefaultPsdTolerance(a));
}

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kPsd ? "PSD" : "NOT_PSD";
}

ScopedDecompositionObserver::ScopedDecompositionObserver(Callback callback)
    : callback_(std::move(callback)), previous_(g_observer) {
  g_observer = this;
}

ScopedDecompositionObserver::~ScopedDecompositionObserver() {
  g_observer = previous_;
}

}  // namespace algconn
