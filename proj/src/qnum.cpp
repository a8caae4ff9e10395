#include "superq/qnum.hpp"

namespace superq {

Scalar q_power(const FieldContext& ctx, long n) {
    return Scalar::one(ctx).times_q_power(n);
}

Scalar q_int(const FieldContext& ctx, long n) {
    bool neg = n < 0;
    long m = neg ? -n : n;
    Scalar s = Scalar::zero(ctx);
    for (long e = m - 1; e >= 1 - m; e -= 2) s += q_power(ctx, e);
    return neg ? -s : s;
}

Scalar q_factorial(const FieldContext& ctx, long n) {
    Scalar s = Scalar::one(ctx);
    for (long i = 2; i <= n; ++i) s = s * q_int(ctx, i);
    return s;
}

Scalar gauss_binomial(const FieldContext& ctx, long n, long k) {
    if (k < 0 || k > n) throw IndexError("gauss_binomial requires 0 <= k <= n");
    // row-by-row q-Pascal; row r holds {r j} for 0 <= j <= min(r,k)
    std::vector<Scalar> row(k + 1, Scalar::zero(ctx));
    row[0] = Scalar::one(ctx);
    for (long r = 1; r <= n; ++r) {
        for (long j = std::min(r, k); j >= 1; --j) {
            Scalar v = row[j].times_q_power(j); // q^j {r-1 j}
            v += row[j - 1].times_q_power(j - r); // q^(j-r) {r-1 j-1}
            row[j] = std::move(v);
        }
    }
    return row[k];
}

Scalar q_number(const FieldContext& ctx, long k, long base) {
    Scalar s = Scalar::zero(ctx);
    for (long m = 0; m < k; ++m) s += q_power(ctx, base * m);
    return s;
}

Scalar q_number_factorial(const FieldContext& ctx, long n, long base) {
    Scalar s = Scalar::one(ctx);
    for (long i = 2; i <= n; ++i) s = s * q_number(ctx, i, base);
    return s;
}

Scalar q_minus_qinv(const FieldContext& ctx) {
    return q_power(ctx, 1) - q_power(ctx, -1);
}

} // namespace superq
