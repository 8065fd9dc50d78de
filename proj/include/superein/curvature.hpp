#pragma once

// Block-scaled metrics, their Levi-Civita connection and Ricci tensor, each
// computed two independent ways, and the naturally-reductive check.

#include "superein/families.hpp"
#include "superein/supercore.hpp"

#include <optional>
#include <vector>

namespace superein {

/// Scaling vector aligned with the decomposition (x_0 only when k_0 exists).
struct MetricParams
{
  std::vector<double> x;
};

/// nabla[i] is the matrix of nabla_{e_i}: column j holds the coordinates of
/// nabla_{e_i} e_j, i.e. nabla[i](k, j) = gamma[i][j][k].
struct Connection
{
  std::vector<CMatrix> nabla;

  Complex gamma(std::size_t i, std::size_t j, std::size_t k) const
  {
    return nabla[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
  }
};

/// x_0 B|k_0 + sum_i x_i B|k_i + B|odd. Throws InputError on length mismatch
/// or a zero x_i.
BilinearFormMatrix metric_from_params(const Realization& real, const MetricParams& params);

/// Solves the Koszul formula against the metric's Gram matrix.
Connection levi_civita_koszul(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric);

/// Direct four-case formula: 1/2, 1/2, (1 - x_i/2), x_i/2 times the bracket.
Connection levi_civita_blockwise(const Realization& real, const MetricParams& params);

struct ConnectionCheck
{
  double compatibility = 0.0;
  double torsion = 0.0;
  double parity = 0.0;
};

ConnectionCheck check_connection(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric, const Connection& conn);

double connection_deviation(const Connection& a, const Connection& b);

/// ric(X,Y) = str(Z -> R(Z,X)Y) summed from the connection. The returned flags
/// record whether evenness and supersymmetry held to 1e-9 (relative) before
/// symmetrization; the Gram is symmetrized only when they did.
struct RicciDirect
{
  BilinearFormMatrix ric;
  double symmetry_residual = 0.0;
};

RicciDirect ricci_direct(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric, const Connection& conn);

/// Block formula: -x_0^2/4 K on k_0, (l_i x_i^2 - 1)/4 K_i on k_i,
/// sum_i (x_i/2 - 1) B(X, C_i Y) on the odd part, zero elsewhere.
BilinearFormMatrix ricci_closed_form(const Realization& real, const MetricParams& params);

/// Max residual of <[X,Y]_m, Z>' = <X, [Y,Z]_m>' over basis triples of the
/// complement m(t) in g + g_0. t defaults to x; other values are a diagnostic.
double verify_naturally_reductive(const Realization& real, const MetricParams& params,
                                  const std::optional<std::vector<double>>& t = std::nullopt);

/// Uniform draws in [-3, 3] avoiding |x| < 0.1, one per metric variable.
MetricParams random_params(std::size_t count, unsigned long long seed, std::size_t draw);

} // namespace superein
