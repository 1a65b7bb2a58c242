#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "breakgeo/rational.hpp"

namespace breakgeo {

/// One value per adjacency class, in the order alpha, beta, gamma, delta.
template <typename T>
struct Quad {
  std::array<T, 4> v{};

  T& operator[](std::size_t i) { return v[i]; }
  const T& operator[](std::size_t i) const { return v[i]; }
  T sum() const { return v[0] + v[1] + v[2] + v[3]; }
  bool operator==(const Quad&) const = default;
};

using MomentVector = Quad<Rational>;
using VarianceVector = Quad<Rational>;

inline constexpr std::array<const char*, 4> kClassNames{"alpha", "beta", "gamma", "delta"};

MomentVector expected_counts_conditional(int n, int m, int k);
MomentVector expected_counts_unconditional(int n, int m);
VarianceVector variance_counts_conditional(int n, int m, int k);
VarianceVector variance_counts_unconditional(int n, int m);

/// The reference closed forms, evaluated as written. Kept for comparison only.
MomentVector displayed_expectation_unconditional(int n, int m);
VarianceVector displayed_variance_conditional(int n, int m, int k);
/// Reference expanded polynomials for the unconditional variances, each added to
/// E(1-E) with the reference expectation.
VarianceVector displayed_variance_unconditional(int n, int m);

struct LimitVector {
  Quad<double> unconditional;
  std::optional<Quad<double>> conditional;
};

/// Stated limits of E[.]/n.
LimitVector asymptotic_limits(double c, std::optional<double> c_prime = std::nullopt);

/// Reference leading coefficients of Var(.)/n as functions of c = m/n.
Quad<double> leading_variance_coefficients(double c);
/// Limit of E[delta_m]/n obtained from the exact sums.
double delta_limit_from_sums(double c);
/// Leading coefficient of Var(gamma_m)/n obtained from the exact sums.
double gamma_variance_coefficient_from_sums(double c);

struct Feasibility {
  bool feasible = true;
  std::vector<std::string> violated;
};

Feasibility feasibility_check(double c, double c_prime);

}  // namespace breakgeo
