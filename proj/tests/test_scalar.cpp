#include "doctest.h"

#include "superq/qnum.hpp"

using namespace superq;

namespace {

// Independent oracle: naive polynomial remainder of x^n modulo an integer
// monic polynomial, over rationals.
std::vector<Rat> poly_mod_oracle(std::vector<Rat> p, const std::vector<Int>& m) {
    int dm = (int)m.size() - 1;
    for (int k = (int)p.size() - 1; k >= dm; --k) {
        Rat c = p[k];
        if (c == 0) continue;
        for (int i = 0; i <= dm; ++i) p[k - dm + i] -= c * Rat(m[i]);
    }
    p.resize(dm);
    return p;
}

// Independent oracle: extended Euclid over Q[x] against a monic modulus.
std::vector<Rat> inverse_oracle(std::vector<Rat> a, const std::vector<Int>& m) {
    auto deg = [](const std::vector<Rat>& p) {
        for (int i = (int)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    size_t n = m.size();
    std::vector<Rat> r0(n), r1 = a, s0(n), s1(n);
    for (size_t i = 0; i < n; ++i) r0[i] = Rat(m[i]);
    r1.resize(n);
    s1[0] = 1;
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        while (d0 >= d1 && d1 >= 0) {
            Rat f = r0[d0] / r1[d1];
            for (int i = 0; i <= d1; ++i) r0[i + d0 - d1] -= f * r1[i];
            for (size_t i = 0; i + d0 - d1 < n; ++i) s0[i + d0 - d1] -= f * s1[i];
            d0 = deg(r0);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    REQUIRE(deg(r1) == 0);
    for (auto& c : s1) c /= r1[0];
    s1.resize(n - 1);
    return s1;
}

Scalar from_coeffs(const FieldContext& ctx, std::vector<long> v) {
    std::vector<Rat> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return Scalar(ctx, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(FieldContext::get(3).phi() == std::vector<Int>{1, 1, 1});
    CHECK(FieldContext::get(5).phi() == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(FieldContext::get(7).degree() == 6);
    CHECK(FieldContext::get(9).phi() == std::vector<Int>{1, 0, 0, 1, 0, 0, 1});
    CHECK_THROWS(FieldContext::get(4));
    CHECK_THROWS(FieldContext::get(1));
}

TEST_CASE("q_power against the division oracle") {
    const auto& c3 = FieldContext::get(3);
    CHECK(q_power(c3, 3) == Scalar::one(c3));
    CHECK(q_power(c3, 2) == from_coeffs(c3, {-1, -1})); // oracle: q^2 mod Phi_3 = -1 - q

    const auto& c5 = FieldContext::get(5);
    CHECK(q_power(c5, -1) == from_coeffs(c5, {0, 0, 0, 0, 1})); // q^4

    for (int d : {3, 5, 7, 9}) {
        const auto& ctx = FieldContext::get(d);
        for (int n = 0; n < 2 * d; ++n) {
            std::vector<Rat> p(n + 1);
            p[n] = 1;
            CHECK(q_power(ctx, n).coeffs() == poly_mod_oracle(p, ctx.phi()));
        }
    }
}

TEST_CASE("q_power is a homomorphism") {
    for (int d : {3, 5, 7}) {
        const auto& ctx = FieldContext::get(d);
        for (int n = -6; n <= 6; ++n)
            for (int m = -6; m <= 6; ++m)
                CHECK(q_power(ctx, n) * q_power(ctx, m) == q_power(ctx, n + m));
    }
}

TEST_CASE("inverse against the extended-Euclid oracle") {
    const auto& c3 = FieldContext::get(3);
    CHECK(q_power(c3, 1).inverse() == q_power(c3, 2)); // q^-1 = q^(d-1)
    CHECK(Scalar::one(c3).inverse() == Scalar::one(c3));
    CHECK_THROWS_AS(Scalar::zero(c3).inverse(), DivisionByZero);

    Scalar x = q_minus_qinv(c3); // q - q^-1
    Scalar inv = x.inverse();
    CHECK(inv.coeffs() == inverse_oracle(x.coeffs(), c3.phi()));
    CHECK((x * inv).is_one());

    // random nonzero scalars at several d: x * invert(x) = 1 exactly
    unsigned long seed = 12345;
    auto next = [&seed]() { seed = seed * 6364136223846793005ULL + 1442695040888963407ULL; return (long)((seed >> 33) % 19) - 9; };
    for (int d : {3, 5, 7}) {
        const auto& ctx = FieldContext::get(d);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<long> v(ctx.degree());
            for (auto& a : v) a = next();
            Scalar s = from_coeffs(ctx, v);
            if (s.is_zero()) continue;
            CHECK((s * s.inverse()).is_one());
            CHECK(s.inverse().coeffs() == inverse_oracle(s.coeffs(), ctx.phi()));
        }
    }
}

TEST_CASE("q_int") {
    const auto& c3 = FieldContext::get(3);
    CHECK(q_int(c3, 0).is_zero());
    CHECK(q_int(c3, 3).is_zero());          // n = d
    CHECK(q_int(c3, 2) == -Scalar::one(c3)); // oracle: q + q^2 = -1 mod Phi_3
    for (int d : {3, 5, 7}) {
        const auto& ctx = FieldContext::get(d);
        CHECK(q_int(ctx, d).is_zero());
        for (int n = -8; n <= 8; ++n) {
            CHECK(q_int(ctx, -n) == -q_int(ctx, n));
            CHECK(q_int(ctx, n + d) == q_int(ctx, n));
            // definition check where the quotient form is defined
            CHECK(q_int(ctx, n) * q_minus_qinv(ctx) == q_power(ctx, n) - q_power(ctx, -n));
        }
    }
}

TEST_CASE("q_factorial and gauss_binomial") {
    const auto& c3 = FieldContext::get(3);
    CHECK(gauss_binomial(c3, 5, 0).is_one());
    CHECK(gauss_binomial(c3, 2, 1) == q_int(c3, 2));
    CHECK(gauss_binomial(c3, 3, 1).is_zero()); // 1 + q^2 + q^4 = 0 mod Phi_3
    CHECK_THROWS_AS(gauss_binomial(c3, 2, 3), IndexError);
    CHECK_THROWS_AS(gauss_binomial(c3, 2, -1), IndexError);

    for (int d : {3, 5, 7}) {
        const auto& ctx = FieldContext::get(d);
        for (int k = 1; k < d; ++k) CHECK(gauss_binomial(ctx, d, k).is_zero());
        // {n k} [k]! [n-k]! = [n]! holds as an identity in F
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(gauss_binomial(ctx, n, k) * q_factorial(ctx, k) * q_factorial(ctx, n - k) ==
                      q_factorial(ctx, n));
    }
}

TEST_CASE("q-number family used by exp_q") {
    const auto& c5 = FieldContext::get(5);
    CHECK(q_number(c5, 0, 2).is_zero());
    CHECK(q_number(c5, 1, 2).is_one());
    // (k)_{q^2} nonzero for 0 < k < d when d is odd
    for (int d : {3, 5, 7}) {
        const auto& ctx = FieldContext::get(d);
        for (int k = 1; k < d; ++k) CHECK(!q_number(ctx, k, 2).is_zero());
        CHECK(q_number(ctx, d, 2).is_zero());
        // (k)_q (q - 1) = q^k - 1
        for (int k = 0; k < 2 * d; ++k)
            CHECK(q_number(ctx, k, 1) * (q_power(ctx, 1) - Scalar::one(ctx)) ==
                  q_power(ctx, k) - Scalar::one(ctx));
    }
}

TEST_CASE("scalar display") {
    const auto& c3 = FieldContext::get(3);
    CHECK(Scalar::zero(c3).to_string() == "0");
    CHECK(q_power(c3, 2).to_string() == "-1 - q");
    CHECK((q_power(c3, 1) + q_power(c3, 1)).to_string() == "2*q");
}
