#pragma once

#include "superq/cyclotomic.hpp"

namespace superq {

/// q^n for any integer n, reduced via q^d = 1.
Scalar q_power(const FieldContext& ctx, long n);

/// [n] = (q^n - q^-n)/(q - q^-1), computed as the balanced geometric sum
/// q^(n-1) + q^(n-3) + ... + q^(1-n); no division, so it is defined for
/// every n including multiples of d (where it vanishes).
Scalar q_int(const FieldContext& ctx, long n);

/// [n]! = [1][2]...[n].
Scalar q_factorial(const FieldContext& ctx, long n);

/// Gaussian binomial via the q-Pascal recurrence
///   {n k} = q^-(n-k) {n-1 k-1} + q^k {n-1 k},
/// evaluated in F (never divides, so it survives roots of unity).
/// Throws IndexError unless 0 <= k <= n.
Scalar gauss_binomial(const FieldContext& ctx, long n, long k);

/// (k)_q = 1 + q + ... + q^(k-1) and (n)_q! over an arbitrary q-power base:
/// base = 1 gives (k)_q, base = 2 gives (k)_{q^2} (used by exp_{q^2}).
Scalar q_number(const FieldContext& ctx, long k, long base);
Scalar q_number_factorial(const FieldContext& ctx, long n, long base);

/// (q - q^-1), a unit in F for odd d >= 3.
Scalar q_minus_qinv(const FieldContext& ctx);

} // namespace superq
