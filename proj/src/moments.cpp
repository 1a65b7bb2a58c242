#include "breakgeo/moments.hpp"

#include <cmath>
#include <sstream>

#include "breakgeo/error.hpp"

namespace breakgeo {

namespace {

void require_conditional(int n, int m, int k) {
  if (k < 1 || m < k || m > n - k) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= k <= m <= n-k, got n=" + std::to_string(n) +
                                             " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
}

void require_unconditional(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

enum Cls { Iso = 0, End = 1, Int = 2 };

int pair_type(int a, int b) {
  if (a == Int || b == Int) return 3;
  if (a == Iso && b == Iso) return 0;
  if (a == End && b == End) return 2;
  return 1;
}

/// Ordered draws of distinct values whose classes follow `seq`.
BigInt ordered_ways(const std::array<long, 3>& sizes, std::initializer_list<int> seq) {
  std::array<long, 3> left = sizes;
  BigInt ways = 1;
  for (int c : seq) {
    if (left[c] <= 0) return 0;
    ways *= left[c];
    --left[c];
  }
  return ways;
}

/// Numerators over n of the conditional expectations.
std::array<BigInt, 4> conditional_expectation_numerators(long n, long m, long k) {
  const long free = n - m - k;
  const long inner = m - k;
  return {BigInt(free) * (free - 1), BigInt(4 * k) * free, BigInt(2 * k) * (2 * k - 1),
          BigInt(inner) * (2 * n - m + k - 1)};
}

/// 2*A + B for each class: A counts ordered triples whose two consecutive pairs
/// share the class, B counts ordered quadruples whose disjoint pairs share it.
/// Divided by n(n-1) this is E[X(X-1)] for the class count X.
std::array<BigInt, 4> pair_pattern_numerators(long n, long m, long k) {
  const std::array<long, 3> sizes{n - m - k, 2 * k, m - k};
  std::array<BigInt, 4> out{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int t = pair_type(a, b);
      for (int c = 0; c < 3; ++c) {
        if (pair_type(b, c) == t) out[t] += 2 * ordered_ways(sizes, {a, b, c});
        for (int d = 0; d < 3; ++d) {
          if (pair_type(c, d) == t) out[t] += ordered_ways(sizes, {a, b, c, d});
        }
      }
    }
  }
  return out;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Calls fn(k, W_k) with W_k = C(m-1,k-1) C(n-m,k) for every k with W_k > 0.
template <typename Fn>
void for_each_weight(long n, long m, Fn&& fn) {
  BigInt w = binomial(n - m, 1);
  for (long k = 1; k <= m && k <= n - m; ++k) {
    fn(k, w);
    w *= (m - k) * (n - m - k);
    mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(k * (k + 1)));
    if (w == 0) break;
  }
}

}  // namespace

MomentVector expected_counts_conditional(int n, int m, int k) {
  require_conditional(n, m, k);
  const auto num = conditional_expectation_numerators(n, m, k);
  MomentVector out;
  for (int t = 0; t < 4; ++t) out[t] = ratio(num[t], n);
  return out;
}

MomentVector expected_counts_unconditional(int n, int m) {
  require_unconditional(n, m);
  std::array<BigInt, 4> acc{};
  for_each_weight(n, m, [&](long k, const BigInt& w) {
    const auto num = conditional_expectation_numerators(n, m, k);
    for (int t = 0; t < 4; ++t) acc[t] += w * num[t];
  });
  const BigInt den = BigInt(n) * binomial(n - 1, m);
  MomentVector out;
  for (int t = 0; t < 4; ++t) out[t] = ratio(acc[t], den);
  return out;
}

VarianceVector variance_counts_conditional(int n, int m, int k) {
  require_conditional(n, m, k);
  const auto e = expected_counts_conditional(n, m, k);
  const auto pattern = pair_pattern_numerators(n, m, k);
  const BigInt den = BigInt(n) * (n - 1);
  VarianceVector out;
  for (int t = 0; t < 4; ++t) out[t] = e[t] * (1 - e[t]) + ratio(pattern[t], den);
  return out;
}

VarianceVector variance_counts_unconditional(int n, int m) {
  require_unconditional(n, m);
  const auto e = expected_counts_unconditional(n, m);
  std::array<BigInt, 4> acc{};
  for_each_weight(n, m, [&](long k, const BigInt& w) {
    const auto pattern = pair_pattern_numerators(n, m, k);
    for (int t = 0; t < 4; ++t) acc[t] += w * pattern[t];
  });
  const BigInt den = BigInt(n) * (n - 1) * binomial(n - 1, m);
  VarianceVector out;
  for (int t = 0; t < 4; ++t) out[t] = e[t] * (1 - e[t]) + ratio(acc[t], den);
  return out;
}

MomentVector displayed_expectation_unconditional(int n, int m) {
  require_unconditional(n, m);
  if (n < 3) throw Error(ErrorKind::InvalidRange, "reference forms need n >= 3");
  const BigInt N = n, M = m;
  const BigInt den = N * (N - 1) * (N - 2);
  MomentVector out;
  out[0] = ratio((N - M) * (N - M - 1) * (N - M - 1) * (N - M - 2), den);
  out[1] = ratio(4 * M * (N - M) * (N - M - 1) * (N - M - 1), den);
  out[2] = ratio(2 * M * (N - M) * (2 * M * (N - M) + N), den);
  out[3] = ratio(M * (M - 1) * (2 * N * N - 6 * N - M * M + 3 * M + 2), den);
  return out;
}

VarianceVector displayed_variance_conditional(int n, int m, int k) {
  require_conditional(n, m, k);
  const auto e = expected_counts_conditional(n, m, k);
  const BigInt N = n, M = m, K = k;
  const BigInt free = N - M - K;
  const BigInt den = N * (N - 1);
  std::array<Rational, 4> extra;
  extra[0] = ratio(free * (free - 1) * (free - 1) * (free - 2), den);
  extra[1] = ratio(4 * K * free * ((free - 1) * (4 * K - 1) + 2 * K - 1), den);
  extra[2] = ratio(2 * K * (2 * K - 1) * (2 * K - 1) * (2 * K - 2), den);
  extra[3] = ratio((M - K) * ((M - K - 1) * (2 * N - M + K - 2) * (2 * N - M + K - 3) + 2 * (N - 2) * (N - 1)), 2 * den);
  VarianceVector out;
  for (int t = 0; t < 4; ++t) out[t] = e[t] * (1 - e[t]) + extra[t];
  return out;
}

VarianceVector displayed_variance_unconditional(int n, int m) {
  require_unconditional(n, m);
  if (n < 5) throw Error(ErrorKind::InvalidRange, "reference variance polynomials need n >= 5");
  const auto e = displayed_expectation_unconditional(n, m);
  const BigInt N = n, M = m;
  const BigInt den = (N - 4) * (N - 3) * (N - 2) * (N - 1) * (N - 1) * N;
  std::array<Rational, 4> extra;
  extra[0] = ratio((N - M) * (N - M - 1) * (N - M - 1) * (N - M - 2) * (N - M - 2) * (N - M - 3) *
                       (N * N - 5 * N + 4 - 2 * M * N + M * (M + 7)),
                   N * (N - 1) * (N - 1) * (N - 2) * (N - 3) * (N - 4));
  extra[1] = ratio(4 * M * (M - N) * (M - N + 1) * (M - N + 1) *
                       ((1 - 4 * M) * N * N * N + (4 * M * (3 * M + 5) - 3) * N * N -
                        (M + 1) * (3 * M * (4 * M + 11) + 1) * N + 4 * (M + 1) * (M + 1) * (M * (M + 4) + 1)),
                   den);
  extra[2] = ratio(4 * (M - 1) * M * (M - N) * (M - N + 1) *
                       (4 * M * M * M * M - 8 * M * M * M * N + 4 * M * M * (N * N + N + 3) - 4 * M * N * (N + 3) +
                        N * (N + 9) - 4),
                   den);
  extra[3] = ratio((M - 1) * M *
                       ((M - 5) * M * (M * (M * M * M - 10 * M * M + M + 40) + 4) + 4 * (M - 4) * (M + 1) * N * N * N * N +
                        2 * (9 - 23 * (M - 3) * M) * N * N * N +
                        2 * (M * (M * (51 - 2 * (M - 8) * M) - 235) + 50) * N * N +
                        2 * M * (M * (13 * (M - 8) * M + 121) + 170) * N + 2 * N * N * N * N * N - 152 * N + 48),
                   den);
  VarianceVector out;
  for (int t = 0; t < 4; ++t) out[t] = e[t] * (1 - e[t]) + extra[t];
  return out;
}

LimitVector asymptotic_limits(double c, std::optional<double> c_prime) {
  if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorKind::InvalidRange, "c must lie in [0, 1]");
  LimitVector out;
  const double d = 1.0 - c;
  out.unconditional = Quad<double>{{d * d * d * d, 4 * c * d * d * d, 4 * c * c * d * d, c * c * (2 - c) * (2 - c)}};
  if (c_prime) {
    const double cp = *c_prime;
    if (!(cp >= 0.0 && cp <= c && c <= 1.0 - cp)) {
      throw Error(ErrorKind::InvalidRange, "need 0 <= c' <= c <= 1 - c'");
    }
    const double free = 1.0 - c - cp;
    out.conditional = Quad<double>{{free * free, 4 * cp * free, 4 * cp * cp, (c - cp) * (2 - c + cp)}};
  }
  return out;
}

Quad<double> leading_variance_coefficients(double c) {
  const double d = 1.0 - c;
  return Quad<double>{{std::pow(d, 4) * c * c * (8 + c * (-12 + 5 * c)),
                       4 * std::pow(d, 3) * c * c * (8 - c * (31 + 4 * c * (-11 + 5 * c))),
                       4 * d * d * c * c * (1 - 4 * d * c * (1 + 5 * d * c)),
                       c * c * std::pow(1 - c * c, 2) * (4 + c * (-8 + 5 * c))}};
}

double delta_limit_from_sums(double c) { return c * c * (2 - c * c); }

double gamma_variance_coefficient_from_sums(double c) {
  const double d = 1.0 - c;
  return 4 * d * d * c * c * (1 - 4 * d * c * (1 - 5 * d * c));
}

Feasibility feasibility_check(double c, double cp) {
  constexpr double tol = 1e-12;
  Feasibility out;
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  };
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      out.feasible = false;
      out.violated.push_back(what);
    }
  };
  const double middle = 1 - c - (1 - c - cp) * (1 - c - cp);
  const double bound = 4 * cp - 4 * c * cp;
  require(middle <= bound + tol, "1-c-(1-c-c')^2 <= 4c'-4cc' (" + fmt(middle) + " > " + fmt(bound) + ")");
  require(cp <= middle + tol, "c' <= 1-c-(1-c-c')^2 (" + fmt(cp) + " > " + fmt(middle) + ")");
  require(middle <= 2 * cp + tol, "1-c-(1-c-c')^2 <= 2c' (" + fmt(middle) + " > " + fmt(2 * cp) + ")");
  require(cp > 0, "0 < c' (c' = " + fmt(cp) + ")");
  require(cp <= c + tol, "c' <= c (" + fmt(cp) + " > " + fmt(c) + ")");
  require(c <= 1 - cp + tol, "c <= 1-c' (" + fmt(c) + " > " + fmt(1 - cp) + ")");
  return out;
}

}  // namespace breakgeo
