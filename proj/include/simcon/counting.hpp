#pragma once

#include <array>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace simcon {

/// Exact arbitrary-precision integer. Class counts grow like 5^k, so fixed
/// width would overflow near k = 20.
using BigInt = boost::multiprecision::cpp_int;

struct CountVector3 {
  std::array<BigInt, 3> v{};

  BigInt one_norm() const { return v[0] + v[1] + v[2]; }
};

struct CountMatrix3 {
  std::array<std::array<BigInt, 3>, 3> a{};

  static CountMatrix3 identity() {
    CountMatrix3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
    return m;
  }

  friend CountMatrix3 operator*(const CountMatrix3& x, const CountMatrix3& y) {
    CountMatrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) r.a[i][j] += x.a[i][l] * y.a[l][j];
    return r;
  }

  friend CountVector3 operator*(const CountMatrix3& x, const CountVector3& y) {
    CountVector3 r;
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) r.v[i] += x.a[i][l] * y.v[l];
    return r;
  }

  CountMatrix3 pow(unsigned e) const {
    CountMatrix3 result = identity();
    CountMatrix3 base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }
};

/// Transition matrix for counting binary congruence classes by arch count.
/// Rows and columns index the class of the leading alpha factor (first
/// letter, empty, second letter); delta = k - m stays fixed along the
/// diagonals of the class-count table.
inline CountMatrix3 class_transition_matrix(unsigned delta) {
  CountMatrix3 d;
  for (int j = 0; j < 3; ++j) {
    d.a[0][j] = delta;
    d.a[2][j] = delta;
  }
  d.a[1][0] = 1;
  d.a[1][1] = 2;
  d.a[1][2] = 1;
  return d;
}

/// Number of ~_k classes of binary words with exactly m < k arches, as the
/// 1-norm of D^m * (k-m, 1, k-m)^T.
inline BigInt classes_with_m_arches_matrix(unsigned k, unsigned m) {
  if (m >= k) throw std::domain_error("matrix class count requires m < k");
  const unsigned delta = k - m;
  CountVector3 e;
  e.v = {BigInt(delta), BigInt(1), BigInt(delta)};
  return (class_transition_matrix(delta).pow(m) * e).one_norm();
}

/// The same counts by the recurrence
///   c_k^{-1} = 1,  c_k^0 = 2k + 1,
///   c_k^m = 2(k - m + 1) c_{k-1}^{m-1} - 2(k - m) c_{k-2}^{m-2},
/// iterated along the diagonal k - m = const.
inline BigInt classes_with_m_arches_rec(unsigned k, long long m) {
  if (m < -1 || m > static_cast<long long>(k))
    throw std::domain_error("recurrence class count requires -1 <= m <= k");
  if (m == -1) return 1;
  const unsigned delta = k - static_cast<unsigned>(m);
  BigInt prev2 = 1;               // c_{delta-1}^{-1}
  BigInt prev1 = 2 * delta + 1;   // c_delta^0
  if (m == 0) return prev1;
  for (long long n = 1; n <= m; ++n) {
    BigInt cur = 2 * (delta + 1) * prev1 - 2 * delta * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

/// |Sigma_2^* / ~_k| = 1 + sum of c_k^m over m < k; the extra class holds
/// all words with at least k arches.
inline BigInt simon_index_binary(unsigned k) {
  BigInt total = 1;
  for (unsigned m = 0; m < k; ++m) total += classes_with_m_arches_rec(k, m);
  return total;
}

/// Number of ~_k classes of perfect m-universal binary words (m arches and
/// an empty rest): the initial vector (0, 1, 0) pins the boundary alpha to
/// the empty class. At m = k there is exactly one class, the class of all
/// words with at least k arches restricted to perfect ones.
inline BigInt perfect_universal_counts(unsigned k, unsigned m) {
  if (m > k) throw std::domain_error("perfect class count requires m <= k");
  if (m == k) return 1;
  CountVector3 e;
  e.v = {BigInt(0), BigInt(1), BigInt(0)};
  return (class_transition_matrix(k - m).pow(m) * e).one_norm();
}

/// Lucas sequence of the first kind: U_0 = 0, U_1 = 1,
/// U_n = P U_{n-1} - Q U_{n-2}.
inline BigInt lucas_u(const BigInt& p, const BigInt& q, unsigned n) {
  if (n == 0) return 0;
  BigInt prev = 0, cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    BigInt nxt = p * cur - q * prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

}  // namespace simcon
