#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "grover/graph.hpp"
#include "grover/matrix.hpp"
#include "grover/polynomial.hpp"

namespace grover {

/// D_0..D_{n-1}: product of the level-to-level hopping probabilities
/// between C_i and C_{i+1} (d(n) read as 0).
std::vector<Rational> hopping_rates(const BetheSpec& spec);

/// Ages i in [1, n] whose level C_{n-i} has at least two children.
std::set<std::size_t> branching_levels(const BetheSpec& spec);

/// g_0..g_{n+1}: g_i = (d(n-i+1)+1) x g_{i-1} - d(n-i+1) g_{i-2} for
/// 2 <= i <= n, closed by g_{n+1} = d(0) (x g_n - g_{n-1}).
std::vector<Polynomial> g_sequence(const BetheSpec& spec);

/// p_0..p_{n+1}: characteristic polynomials of the trailing principal
/// blocks of the quotient tridiagonal, p_i = x p_{i-1} - D_{n-i+1} p_{i-2}.
std::vector<Polynomial> p_sequence(const BetheSpec& spec);

/// Quotient of T over the level partition: B(i, i+1) = d(i)/deg(C_i),
/// B(i, i-1) = 1/deg(C_i). Similar to the symmetric tridiagonal with
/// off-diagonals sqrt(D_i).
RationalMatrix level_quotient_matrix(const BetheSpec& spec);

/// det(x I - B), an independent route to p_{n+1}.
Polynomial quotient_charpoly(const BetheSpec& spec);

bool verify_p_equals_monic_g(const BetheSpec& spec);

enum class ChebyshevKind { First, Second };

/// T_i or U_i; the second kind accepts i = -1 (U_{-1} = 0).
Polynomial chebyshev(ChebyshevKind kind, int i);

/// (2z)^i T_i((z+1/z)/2) = 2^{i-1}(z^{2i}+1) or
/// (2z)^i U_i((z+1/z)/2) = 2^i sum_j z^{2i-2j}, as exact identities.
bool chebyshev_identity_check(ChebyshevKind kind, int i);

/// Length of the trailing run of ones in the spec (levels n-1, n-2, ...).
std::size_t trailing_ones(const BetheSpec& spec);

/// p_i == T_i / 2^{i-1} for every i in [1, K1], K1 = trailing_ones + 1
/// capped at n.
bool claim_path_check(const BetheSpec& spec);

/// A_perp eigenfunction attached to age i, a vertex v* on level n - i and
/// two of its children. Values are polynomials in x, meaningful modulo
/// the monic g_i.
struct SymbolicEigenfunction {
  std::size_t age = 0;
  Vertex center = 0;
  Vertex first_child = 0;
  Vertex second_child = 0;
  std::vector<Polynomial> values;  // indexed by vertex
};

/// Uses the two lowest-numbered children of v* unless a pair is given.
/// Throws std::invalid_argument when i is not a branching age or v* is on
/// the wrong level.
SymbolicEigenfunction aperp_eigenfunction(const BetheTree& tree, std::size_t age, Vertex center);
SymbolicEigenfunction aperp_eigenfunction(const BetheTree& tree, std::size_t age, Vertex center,
                                          Vertex first_child, Vertex second_child);

/// (T f)(x) == lambda f(x) in Q[lambda]/(monic g_i) at every vertex, and
/// every level sum of f is the zero polynomial.
bool verify_eigenfunction(const BetheTree& tree, const SymbolicEigenfunction& f);

/// Scaling making (c_n p_n, ..., c_0 p_0) an eigenvector of the symmetric
/// quotient tridiagonal: c_0 = 1, c_j = c_{j-1} / sqrt(D_{n-j}).
std::vector<double> eigenvector_scaling(const BetheSpec& spec);

struct EigvecCheck {
  bool recurrence_ok = false;
  double max_residual = 0.0;
  std::vector<double> roots;  // numeric roots of p_{n+1}
  bool ok(double tol = 1e-8) const { return recurrence_ok && max_residual <= tol; }
};

/// Exact three-term identity p_{i+1} == x p_i - D_{n-i} p_{i-1}
/// (mod p_{n+1}) for i in [1, n], plus the numeric eigenvector residual
/// at every root of p_{n+1}.
EigvecCheck a_eigvec_recurrence_check(const BetheSpec& spec);

/// m_i = |C_{n-i}| (d(n-i) - 1) for i in the branching set.
std::map<std::size_t, std::size_t> aperp_multiplicities(const BetheSpec& spec);

/// p_{n+1} * prod_{i in Omega} p_i^{m_i}.
Polynomial predicted_charpoly(const BetheSpec& spec);

inline constexpr std::size_t kDefaultCharpolyVertexLimit = 120;

/// Exact char(T) of the whole tree equals predicted_charpoly. Throws
/// std::length_error above the vertex limit.
bool charpoly_factorization_check(const BetheSpec& spec,
                                  std::size_t vertex_limit = kDefaultCharpolyVertexLimit);

}  // namespace grover
