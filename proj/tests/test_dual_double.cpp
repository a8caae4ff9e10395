#include "doctest.h"

#include "superq/qdouble.hpp"

using namespace superq;

namespace {
constexpr int BK1 = 0, BK2 = 1, BE1 = 2;
constexpr int PF1 = 0, PK1 = 3, PE1 = 5, PE3 = 6;
} // namespace

TEST_CASE("generator functionals") {
    const auto& D = DualSide::get(3);
    const auto& ctx = FieldContext::get(3);
    Expos kk{};
    kk[BK1] = 2;
    kk[BK2] = 1;
    CHECK(D.generator_functional(GAK1, kk) == q_power(ctx, -2 * 2 + 1));
    CHECK(D.generator_functional(GAK2, kk) == q_power(ctx, 2));
    Expos e1{};
    e1[BE1] = 1;
    CHECK(D.generator_functional(GAE1, e1) == -(q_minus_qinv(ctx).inverse()));
    CHECK(D.generator_functional(GAE2, kk).is_zero());

    // dual_eval through the coordinate table agrees on PBW monomials
    const auto& xs = D.x_spec();
    const auto& bs = D.bplus_spec();
    CHECK(D.dual_eval(AlgebraElement::generator(xs, GAK1), AlgebraElement::monomial(bs, kk)) ==
          q_power(ctx, -3));
    CHECK(D.dual_eval(AlgebraElement::generator(xs, GAE2), AlgebraElement::generator(bs, GK1)).is_zero());
}

TEST_CASE("X relation evaluated as functionals") {
    // alpha_e2 alpha_e1 = q alpha_e1 alpha_e2 + alpha_e3 on every basis monomial
    const auto& D = DualSide::get(3);
    const auto& ctx = FieldContext::get(3);
    for (const auto& bm : D.bplus_basis()) {
        Scalar lhs = D.convolve_eval({GAE2, GAE1}, bm);
        Scalar rhs = D.convolve_eval({GAE1, GAE2}, bm).times_q_power(1) + D.convolve_eval({GAE3}, bm);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual consistency suite at d=3") {
    auto rep = DualSide::get(3).consistency_check();
    for (const auto& r : rep.results) {
        INFO(r.check, " ", r.input, " lhs=", r.lhs, " rhs=", r.rhs);
        CHECK(r.pass);
    }
}

TEST_CASE("double multiplication cross relations") {
    const auto& D = DualSide::get(3);
    const auto& xs = D.x_spec();
    const auto& bs = D.bplus_spec();
    const auto& ctx = FieldContext::get(3);
    int d = 3;

    SUBCASE("(1 (x) k1)(ae1 (x) 1) = q^-2 ae1 (x) k1") {
        auto lhs = double_mul(DoubleElement::h_side(d, AlgebraElement::generator(bs, GK1)),
                              DoubleElement::x_side(d, AlgebraElement::generator(xs, GAE1)));
        auto rhs = DoubleElement::of(AlgebraElement::generator(xs, GAE1).scaled(q_power(ctx, -2)),
                                     AlgebraElement::generator(bs, GK1));
        CHECK(lhs == rhs);
    }
    SUBCASE("(1 (x) e1)(ae1 (x) 1) has the three-term form") {
        auto lhs = double_mul(DoubleElement::h_side(d, AlgebraElement::generator(bs, GE1)),
                              DoubleElement::x_side(d, AlgebraElement::generator(xs, GAE1)));
        Scalar inv = q_minus_qinv(ctx).inverse();
        auto rhs = DoubleElement::x_side(d, AlgebraElement::generator(xs, GAK1, d - 1).scaled(-inv));
        rhs += DoubleElement::of(AlgebraElement::generator(xs, GAE1), AlgebraElement::generator(bs, GE1));
        rhs += DoubleElement::h_side(d, AlgebraElement::generator(bs, GK1).scaled(inv));
        CHECK(lhs == rhs);
    }
    SUBCASE("embedding law on a basis pair") {
        auto f = AlgebraElement::generator(xs, GAE3);
        auto a = AlgebraElement::generator(bs, GE2);
        CHECK(double_mul(DoubleElement::x_side(d, f), DoubleElement::h_side(d, a)) ==
              DoubleElement::of(f, a));
    }
}

TEST_CASE("chi images") {
    const auto& D = DualSide::get(3);
    const auto& xs = D.x_spec();
    const auto& bs = D.bplus_spec();
    const auto& us = AlgebraSpec::get(AlgKind::UBar, 3);
    int d = 3;

    auto f1 = chi(DoubleElement::x_side(d, AlgebraElement::generator(xs, GAE1)));
    CHECK(f1 == AlgebraElement::generator(us, GF1));
    auto e3 = chi(DoubleElement::h_side(d, AlgebraElement::generator(bs, GE3)));
    CHECK(e3 == AlgebraElement::generator(us, GE3));

    // chi((1 (x) e1)(ae1 (x) 1)) = e1 f1 computed in UBar
    auto prod = double_mul(DoubleElement::h_side(d, AlgebraElement::generator(bs, GE1)),
                           DoubleElement::x_side(d, AlgebraElement::generator(xs, GAE1)));
    auto expect = AlgebraElement::generator(us, GE1) * AlgebraElement::generator(us, GF1);
    CHECK(chi(prod) == expect);
    (void)PF1;
    (void)PK1;
    (void)PE1;
    (void)PE3;
}

TEST_CASE("all 25 cross relations, chi morphism, embedding at d=3") {
    auto rep = double_relations_check(3);
    CHECK(rep.results.size() == 75);
    for (const auto& r : rep.results) {
        INFO(r.check, " ", r.input, "\n lhs=", r.lhs, "\n rhs=", r.rhs);
        CHECK(r.pass);
    }
}
