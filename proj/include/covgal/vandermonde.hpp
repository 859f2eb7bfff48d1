#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "covgal/errors.hpp"
#include "covgal/numerics.hpp"
#include "covgal/perm.hpp"

namespace covgal {

/// Exponent tuple (i_1, ..., i_{n-1}) with 0 <= i_k <= n-k.
using IndexTuple = std::vector<int>;

/// All n! exponent tuples, ordered by comparing coordinates from the last
/// one backward; starts at (0,...,0), ends at (n-1, n-2, ..., 1).
inline std::vector<IndexTuple> index_order(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<IndexTuple> out;
  IndexTuple cur(n - 1, 0);  // cur[k] ranges over 0..n-1-k
  while (true) {
    out.push_back(cur);
    int k = 0;
    while (k < n - 1 && cur[k] == n - 1 - k) cur[k++] = 0;
    if (k == n - 1) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end(), [](const IndexTuple& a, const IndexTuple& b) {
    for (size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });
  return out;
}

/// The cycle sigma_i = (i i+1 ... n) on 1-based points, 0-based storage.
inline Permutation sigma_cycle(int n, int i) {
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j;
  for (int j = i - 1; j < n - 1; ++j) img[j] = j + 1;
  img[n - 1] = i - 1;
  return Permutation(std::move(img));
}

/// phi_i = sigma_1^{i_1} ... sigma_{n-1}^{i_{n-1}} for the i-th tuple;
/// the n! results are pairwise distinct and exhaust S_n.
inline std::vector<Permutation> sigma_enum(int n) {
  auto tuples = index_order(n);
  std::vector<Permutation> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) {
    Permutation phi = Permutation::identity(n);
    for (int k = 0; k < n - 1; ++k)
      phi = phi * sigma_cycle(n, k + 1).power(t[k]);
    out.push_back(std::move(phi));
  }
  return out;
}

namespace detail {

template <class Scalar>
Scalar monomial(const std::vector<Scalar>& alpha, const Permutation& phi,
                const IndexTuple& exps) {
  Scalar acc(1);
  for (size_t k = 0; k < exps.size(); ++k) {
    Scalar base = alpha[phi(static_cast<int>(k))];
    for (int e = 0; e < exps[k]; ++e) acc = acc * base;
  }
  return acc;
}

template <class Scalar>
void require_distinct(const std::vector<Scalar>& alpha) {
  for (size_t i = 0; i < alpha.size(); ++i)
    for (size_t j = i + 1; j < alpha.size(); ++j) {
      bool dup;
      if constexpr (std::is_same_v<Scalar, GaussianRational>)
        dup = alpha[i] == alpha[j];
      else
        dup = std::abs(alpha[i] - alpha[j]) == 0.0;
      if (dup) throw DuplicateRoots("roots " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1));
    }
}

}  // namespace detail

/// The n! x n! matrix with entry (i, j) = phi_i(x_j) evaluated at alpha,
/// where x_j is the monomial of the j-th exponent tuple.
template <class Scalar>
struct VMatrix {
  int n = 0;
  std::vector<IndexTuple> tuples;
  std::vector<Permutation> phis;
  std::vector<std::vector<Scalar>> entries;
};

template <class Scalar>
VMatrix<Scalar> v_matrix(const std::vector<Scalar>& alpha,
                         bool allow_large = false) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw InputError("need at least one root");
  if (n > 5 && !allow_large)
    throw OrderCapExceeded("V_n capped at n = 5; pass allow_large to override");
  detail::require_distinct(alpha);
  VMatrix<Scalar> V;
  V.n = n;
  V.tuples = index_order(n);
  V.phis = sigma_enum(n);
  const size_t m = V.tuples.size();
  V.entries.assign(m, std::vector<Scalar>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      V.entries[i][j] = detail::monomial(alpha, V.phis[i], V.tuples[j]);
  return V;
}

inline ComplexF det_of(const VMatrix<ComplexF>& V) {
  const int m = static_cast<int>(V.entries.size());
  Eigen::MatrixXcd M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = V.entries[i][j];
  return M.partialPivLu().determinant();
}

inline GaussianRational det_of(const VMatrix<GaussianRational>& V) {
  return exact_det(V.entries);
}

/// Delta(alpha) = det V_n(alpha).
template <class Scalar>
Scalar delta(const std::vector<Scalar>& alpha, bool allow_large = false) {
  return det_of(v_matrix(alpha, allow_large));
}

struct SignCheckReport {
  ComplexF delta_value;
  ComplexF permuted_delta;
  int sign = 1;
  double relative_error = 0.0;
  double square_error = 0.0;  // relative deviation of Delta^2
};

/// Verifies Delta at sigma-permuted roots equals sign(sigma) * Delta, and
/// that Delta^2 is unchanged.
inline SignCheckReport check_sign(const std::vector<ComplexF>& alpha,
                                  const Permutation& sigma,
                                  double rel_tol = 1e-9) {
  SignCheckReport rep;
  rep.delta_value = delta(alpha);
  std::vector<ComplexF> permuted(alpha.size());
  for (size_t k = 0; k < alpha.size(); ++k)
    permuted[k] = alpha[sigma(static_cast<int>(k))];
  rep.permuted_delta = delta(permuted);
  rep.sign = sigma.sign();
  double scale = std::abs(rep.delta_value);
  rep.relative_error =
      std::abs(rep.permuted_delta - ComplexF(rep.sign) * rep.delta_value) /
      scale;
  rep.square_error = std::abs(rep.permuted_delta * rep.permuted_delta -
                              rep.delta_value * rep.delta_value) /
                     (scale * scale);
  if (rep.relative_error > rel_tol || rep.square_error > rel_tol)
    throw ToleranceExceeded("sign check failed with relative error " +
                            std::to_string(rep.relative_error));
  return rep;
}

/// Exact counterpart: both identities hold with equality.
inline bool check_sign_exact(const std::vector<GaussianRational>& alpha,
                             const Permutation& sigma) {
  GaussianRational d = delta(alpha);
  std::vector<GaussianRational> permuted(alpha.size());
  for (size_t k = 0; k < alpha.size(); ++k)
    permuted[k] = alpha[sigma(static_cast<int>(k))];
  GaussianRational pd = delta(permuted);
  GaussianRational expected = sigma.sign() == 1 ? d : -d;
  return pd == expected && pd * pd == d * d;
}

struct GaloisSystemResult {
  std::vector<ComplexF> y;  // V y = e_1
  double max_residual = 0.0;
};

/// Solves V y = (1, 0, ..., 0)^T and verifies the Kronecker relations
/// sum_j sigma(x_j) y_j = delta_{e,sigma} for every sigma in S_n by
/// recomputing the permuted monomials directly.
inline GaloisSystemResult galois_system(const std::vector<ComplexF>& alpha,
                                        double tol = 1e-9,
                                        bool allow_large = false) {
  auto V = v_matrix(alpha, allow_large);
  const int m = static_cast<int>(V.entries.size());
  Eigen::MatrixXcd M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = V.entries[i][j];
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m);
  rhs(0) = 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
  Eigen::VectorXcd y = lu.solve(rhs);
  if (!y.allFinite())
    throw SingularSystem("V_n solve produced non-finite values");

  GaloisSystemResult res;
  res.y.assign(y.data(), y.data() + m);
  for (int i = 0; i < m; ++i) {
    ComplexF acc = 0.0;
    for (int j = 0; j < m; ++j)
      acc += detail::monomial(alpha, V.phis[i], V.tuples[j]) * res.y[j];
    ComplexF expected = V.phis[i].is_identity() ? 1.0 : 0.0;
    res.max_residual = std::max(res.max_residual, std::abs(acc - expected));
  }
  if (res.max_residual > tol)
    throw SingularSystem("G-Galois residual " +
                         std::to_string(res.max_residual));
  return res;
}

}  // namespace covgal
