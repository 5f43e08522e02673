#include "grover/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace grover {

RationalMatrix transition_matrix(const Graph& g) {
  RationalMatrix t(g.vertex_count(), g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const Rational w = make_rational(1, static_cast<long>(g.degree(u)));
    for (Vertex v : g.neighbors(u)) t(u, v) = w;
  }
  return t;
}

namespace {

std::vector<double> simple_real_roots(const Polynomial& f) {
  const int n = f.degree();
  std::vector<double> roots;
  if (n < 1) return roots;
  if (n == 1) {
    roots.push_back(Rational(-f.coeff(0) / f.coeff(1)).get_d());
    return roots;
  }
  const Polynomial m = f.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Polynomial dm = m.derivative();
  for (int i = 0; i < n; ++i) {
    long double x = solver.eigenvalues()(i).real();
    for (int it = 0; it < 50; ++it) {
      long double fx = 0, dfx = 0;
      for (int k = n; k >= 0; --k) fx = fx * x + static_cast<long double>(m.coeff(k).get_d());
      for (int k = n - 1; k >= 0; --k) dfx = dfx * x + static_cast<long double>(dm.coeff(k).get_d());
      if (dfx == 0) break;
      const long double dx = fx / dfx;
      x -= dx;
      if (std::fabs(static_cast<double>(dx)) < 1e-18) break;
    }
    roots.push_back(static_cast<double>(x));
  }
  return roots;
}

}  // namespace

std::vector<double> numeric_real_roots(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    for (double r : simple_real_roots(factor)) out.insert(out.end(), static_cast<std::size_t>(mult), r);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LiftedSpectrum::total_multiplicity() const {
  std::size_t total = static_cast<std::size_t>(mult_plus_one + mult_minus_one);
  for (const auto& p : points) total += 2 * static_cast<std::size_t>(p.multiplicity);
  return total;
}

std::vector<std::complex<double>> LiftedSpectrum::expand() const {
  std::vector<std::complex<double>> out;
  out.insert(out.end(), static_cast<std::size_t>(mult_plus_one), {1.0, 0.0});
  out.insert(out.end(), static_cast<std::size_t>(mult_minus_one), {-1.0, 0.0});
  for (const auto& p : points) {
    const double theta = std::acos(std::clamp(p.mu, -1.0, 1.0));
    out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), std::polar(1.0, theta));
    out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), std::polar(1.0, -theta));
  }
  return out;
}

LiftedSpectrum lift_spectrum(const Polynomial& charpoly_t, const Topology& topo, std::size_t arc_count) {
  LiftedSpectrum ls;
  Polynomial rest = charpoly_t.monic();
  auto strip = [&rest](const Polynomial& linear) {
    int mult = 0;
    while (rest.degree() >= 1) {
      auto [q, r] = divmod(rest, linear);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    return mult;
  };
  const int m_plus = strip(Polynomial{-1, 1});
  const int m_minus = strip(Polynomial{1, 1});
  const auto b1 = static_cast<int>(topo.betti);
  ls.mult_plus_one = b1 + m_plus;
  ls.mult_minus_one = b1 - 1 + 2 * m_minus;
  if (ls.mult_minus_one < 0) throw std::logic_error("negative multiplicity for eigenvalue -1");
  ls.interior = rest;

  const auto roots = numeric_real_roots(rest);
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && std::fabs(roots[j] - roots[i]) < 1e-9) ++j;
    ls.points.push_back({roots[i], static_cast<int>(j - i)});
    i = j;
  }
  if (ls.total_multiplicity() != arc_count)
    throw std::logic_error("lifted spectrum has " + std::to_string(ls.total_multiplicity()) +
                           " eigenvalues for " + std::to_string(arc_count) + " arcs");
  return ls;
}

std::vector<std::complex<double>> numeric_spectrum(const GroverOperator& u, std::size_t dense_limit) {
  const std::size_t n = u.arc_count();
  if (n > dense_limit)
    throw std::length_error("operator has " + std::to_string(n) + " arcs, dense limit is " +
                            std::to_string(dense_limit));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (ArcId e = 0; e < n; ++e)
    for (const auto& en : u.row(e))
      m(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(en.column)) = en.value.get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

double spectrum_mismatch(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  auto angle = [](const std::complex<double>& z) {
    double t = std::arg(z);
    // Fold the branch cut so that -1 sorts consistently.
    if (t < -std::numbers::pi + 1e-7) t += 2 * std::numbers::pi;
    return t;
  };
  auto by_angle = [&](const auto& x, const auto& y) { return angle(x) < angle(y); };
  std::sort(a.begin(), a.end(), by_angle);
  std::sort(b.begin(), b.end(), by_angle);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace grover
