#include "doctest.h"

#include "superq/rep.hpp"

using namespace superq;

TEST_CASE("mu validity") {
    CHECK(RepContext::mu_valid(5, 1));
    CHECK(RepContext::mu_valid(5, 2));
    CHECK(RepContext::mu_valid(5, 3));
    CHECK(!RepContext::mu_valid(5, 0));  // [0] = 0
    CHECK(!RepContext::mu_valid(5, 4));  // [1+4] = [5] = 0
    CHECK(RepContext::mu_valid(3, 1));
    CHECK(!RepContext::mu_valid(3, 2));
    CHECK_THROWS_AS(RepContext::get(5, 0), InvalidMu);
}

TEST_CASE("generator action table") {
    const auto& rc = RepContext::get(5, 2);
    const auto& ctx = rc.ctx();
    // k2 w_{s,r} = q^(mu+s) w_{s,r}
    const auto& k2 = rc.gen_action(GK2);
    CHECK(k2.get(0, 0) == q_power(ctx, 2));
    CHECK(k2.get(1, 1) == q_power(ctx, 3));
    CHECK(k2.get(2, 2) == q_power(ctx, 2));
    CHECK(k2.get(3, 3) == q_power(ctx, 3));
    // f1 sends w01 to -q^-1 w10 and kills everything else
    const auto& f1 = rc.gen_action(GF1);
    CHECK(f1.get(1, 2) == -q_power(ctx, -1));
    CHECK(f1.nnz() == 1);
    // e1^d is the zero matrix
    CHECK(rc.gen_action(GE1).pow(5).is_zero());
}

TEST_CASE("rho_n basics") {
    const auto& rc = RepContext::get(5, 1);
    const auto& s = rc.algebra();
    auto k1 = AlgebraElement::generator(s, GK1);
    CHECK(rc.rho_n(k1, 1) == rc.gen_action(GK1));
    CHECK(rc.rho_n(k1, 2) == rc.gen_action(GK1).kron(rc.gen_action(GK1)));

    // rho_2(e2) on w01 ⊗ w01 = [mu] w00 ⊗ w01 - q^mu w01 ⊗ w00
    // (expand Δ(e2) = e2 ⊗ 1 + k2 ⊗ e2 with the Koszul sign: e2 odd
    //  crossing the odd vector w01 flips the second term's sign)
    auto e2 = AlgebraElement::generator(s, GE2);
    auto m = rc.rho_n(e2, 2);
    int col = 2 * 4 + 2;
    const auto& ctx = rc.ctx();
    CHECK(m.get(0 * 4 + 2, col) == q_int(ctx, 1));
    CHECK(m.get(2 * 4 + 0, col) == -(q_power(ctx, 1) * q_int(ctx, 1)));
}

TEST_CASE("rep fidelity suite at d=5 and d=7, every valid mu") {
    for (int d : {5, 7}) {
        for (long mu = 0; mu < d; ++mu) {
            if (!RepContext::mu_valid(d, mu)) continue;
            const auto& rc = RepContext::get(d, mu);
            auto rep = check_rep(rc);
            for (const auto& r : rep.results) {
                INFO("d=", d, " mu=", mu, " ", r.check, " ", r.input);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("rbar via act2 equals the generic term-by-term action") {
    const auto& rc = RepContext::get(5, 1);
    auto R = r_multiplicative(5);
    CHECK(rc.act2(R.value()) == rc.rbar_vv());
}

TEST_CASE("braiding eigenvalues through the cubic") {
    const auto& rc = RepContext::get(5, 1);
    const auto& ctx = rc.ctx();
    const auto& c = rc.c_matrix();
    SparseMat id = SparseMat::identity(ctx, 16);
    auto m1 = c - id;
    auto m2 = c + id.scaled(q_power(ctx, 2));
    auto m3 = c - id.scaled(q_power(ctx, 6));
    CHECK((m1 * m2 * m3).is_zero());
}
