#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgsum/graph.hpp"
#include "dgsum/matrix.hpp"

namespace dgsum {

/// Assignment factor U (n x k, non-negative) and relation factor S (k x k,
/// skew-symmetric). U^T U = I is a soft constraint driven by the
/// regularizer, not a structural invariant.
struct FactorPair {
  Matrix u;
  Matrix s;
};

enum class Scheme { fixed, adaptive };
enum class InitKind { nndsvd, uniform_random };

struct SolverConfig {
  int k = 2;
  Scheme scheme = Scheme::adaptive;
  double lambda_scale = 1.0;  // fixed scheme: Lambda = lambda_scale * ones(k,k)
  std::optional<Matrix> lambda_full;  // fixed scheme: explicit symmetric non-negative Lambda
  int max_iters = 2000;
  double rel_tol = 1e-8;
  std::uint64_t seed = 0;
  InitKind init = InitKind::nndsvd;
};

struct SolveResult {
  FactorPair factors;
  std::vector<double> trajectory;  // objective per iteration, entry 0 = at init
  int iters = 0;
  bool converged = false;
  double residual = 0.0;  // ||T - U S U^T||_F^2 at exit
  bool degenerate_input = false;   // T was identically zero
  bool init_fallback = false;      // nndsvd filled columns randomly
  bool lambda_check_warning = false;  // adaptive: Lambda + P_+ >= 0 failed at exit
};

/// Hardened summarization: per-vertex compressed-node label (-1 means
/// unassigned) plus directed compressed relations.
struct Summarization {
  struct Relation {
    int from = 0;
    int to = 0;
    double weight = 0.0;
  };
  std::vector<int> assignment;
  std::vector<Relation> relations;
};

struct DiscreteErrors {
  double err_w = 0.0;
  double err_d = 0.0;
};

/// ||T - U S U^T||_F^2.
double objective_residual(const SkewAdjacency& t, const FactorPair& f);

/// ||T - U S U^T||_F^2 + tr(Lambda (U^T U - I)).
double objective_reg(const SkewAdjacency& t, const FactorPair& f, const Matrix& lambda);

/// The adaptive scheme's objective: the regularized trace form with the
/// KKT-optimal Lambda = U^T Q - P substituted (Q = T^T U S, P = S^T U^T U S).
double objective_adaptive(const SkewAdjacency& t, const FactorPair& f);

/// Non-negative SVD-based initial assignment factor: unit-norm non-negative
/// columns harvested from the signed parts of the leading singular vectors.
/// When fewer than k usable directions exist, remaining columns are filled
/// uniform-random non-negative and `fallback` is set.
struct InitResult {
  Matrix u0;
  bool fallback = false;
};
InitResult nndsvd_init(const SkewAdjacency& t, int k, std::uint64_t seed);

/// Dense skew initial relation factor: +1 above the diagonal, -1 below.
/// Multiplicative updates lock zeros forever, so every off-diagonal entry
/// starts nonzero.
Matrix init_S(int k);

/// One multiplicative update of U then S with a constant regularizer.
/// Lambda must be symmetric with non-negative entries.
FactorPair step_fixed(const SkewAdjacency& t, const FactorPair& f, const Matrix& lambda);

/// One update of the adaptive scheme: U update, exact column normalization,
/// then S = U^T T U.
FactorPair step_adaptive(const SkewAdjacency& t, const FactorPair& f);

SolveResult solve(const SkewAdjacency& t, const SolverConfig& cfg);
/// As solve() but with explicit initial factors (u0 n x k non-negative,
/// s0 k x k skew). Used for permutation tests and warm starts.
SolveResult solve_from(const SkewAdjacency& t, const SolverConfig& cfg, const Matrix& u0,
                       const Matrix& s0);

/// Row-argmax hardening; rows whose maximum does not exceed eps_assign stay
/// unassigned. A relation (I, J, S_IJ) is emitted when S_IJ exceeds
/// rel_factor * max|S|; ties in the argmax go to the lowest column index.
Summarization harden(const FactorPair& f, double eps_assign = 1e-6, double rel_factor = 1e-6);

/// Reconstruction errors of a hardened summarization against the graph:
/// err_w is the size-normalized squared weight error with per-block optimal
/// relation weights; err_d counts directional sign mismatches over ordered
/// cross-group pairs. Unassigned vertices contribute nothing.
DiscreteErrors discrete_errors(const DirectedGraph& g, const Summarization& s);

/// n x k indicator matrix of a partition with unit-norm columns; rows of
/// unassigned vertices are zero.
Matrix normalized_indicator(const std::vector<int>& labels, int k);

/// JSON object {"k", "scheme", "iters", "converged", "objective_trajectory",
/// "assignment", "relations", "residual"}; unassigned encoded as -1.
std::string result_json(const SolveResult& r, const Summarization& s, int k, Scheme scheme);

}  // namespace dgsum
