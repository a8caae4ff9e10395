#pragma once

#include <memory>
#include <vector>

#include "superq/errors.hpp"
#include "superq/rational.hpp"

namespace superq {

/// The coefficient field F = Q[q]/(Phi_d(q)) for a fixed odd d >= 3.
///
/// Phi_d is the d-th cyclotomic polynomial (monic, integer coefficients,
/// degree phi(d)). Scalars are polynomials in q of degree < phi(d), kept
/// reduced at all times, so equality is coefficient-wise.
class FieldContext {
public:
    /// Shared immutable context per d. Throws for even or < 3.
    static const FieldContext& get(int d);

    int d() const { return d_; }
    int degree() const { return degree_; }
    const std::vector<Int>& phi() const { return phi_; }

    /// Row k: q^(degree+k) reduced mod Phi_d, integer coefficients.
    const std::vector<Int>& reduction_row(int k) const { return red_rows_[k]; }

private:
    explicit FieldContext(int d);
    int d_;
    int degree_;
    std::vector<Int> phi_;                   // length degree_+1, monic
    std::vector<std::vector<Int>> red_rows_; // degree_-1 rows of length degree_
};

/// An element of F. Immutable value semantics; all arithmetic returns
/// fresh reduced values.
class Scalar {
public:
    Scalar() : ctx_(nullptr) {}
    explicit Scalar(const FieldContext& ctx) : ctx_(&ctx), c_(ctx.degree()) {}
    Scalar(const FieldContext& ctx, const Rat& constant);
    Scalar(const FieldContext& ctx, std::vector<Rat> coeffs); // reduces if too long

    static Scalar zero(const FieldContext& ctx) { return Scalar(ctx); }
    static Scalar one(const FieldContext& ctx) { return Scalar(ctx, Rat(1)); }
    static Scalar of_int(const FieldContext& ctx, long n) { return Scalar(ctx, Rat(n)); }

    const FieldContext& ctx() const { return *ctx_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws DivisionByZero on 0.
    Scalar inverse() const;
    Scalar pow(long n) const; // n >= 0, or any n if invertible

    /// Multiply by q^n (n any integer), cheaper than a general product.
    Scalar times_q_power(long n) const;

    /// Deterministic display, lowest degree first, e.g. "-1/2 + q - 3*q^2".
    std::string to_string() const;

private:
    void reduce(std::vector<Rat>& raw) const;
    const FieldContext* ctx_;
    std::vector<Rat> c_;
};

} // namespace superq
