#include "doctest.h"

#include "superq/hopf.hpp"

using namespace superq;

namespace {

AlgebraElement gen(const AlgebraSpec& s, int g, int e = 1) { return AlgebraElement::generator(s, g, e); }

struct Rng {
    unsigned long state;
    explicit Rng(unsigned long seed) : state(seed) {}
    unsigned long next() { state = state * 6364136223846793005ULL + 1442695040888963407ULL; return state >> 33; }
    int below(int n) { return (int)(next() % (unsigned long)n); }
};

Expos random_monomial(const AlgebraSpec& s, Rng& rng) {
    Expos e{};
    for (int p = 0; p < s.ngens; ++p) e[p] = rng.below(s.cap[p]);
    return e;
}

std::vector<AlgebraElement> all_generators(const AlgebraSpec& s) {
    std::vector<AlgebraElement> out;
    for (int p = 0; p < s.ngens; ++p) out.push_back(gen(s, s.gen[p]));
    return out;
}

} // namespace

TEST_CASE("tensor multiplication implements the Koszul sign") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
    auto one = AlgebraElement::unit(s);
    auto e2 = gen(s, GE2), f2 = gen(s, GF2);

    auto a = TensorElement::of(one, f2) * TensorElement::of(e2, one);
    CHECK(a == TensorElement::of(e2, f2).scaled(-Scalar::one(*s.ctx)));

    auto b = TensorElement::of(e2, one) * TensorElement::of(one, f2);
    CHECK(b == TensorElement::of(e2, f2));

    auto c = TensorElement::of(one, e2) * TensorElement::of(one, e2);
    CHECK(c.is_zero());
}

TEST_CASE("coproduct generator images and multiplicativity") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
    const auto& H = HopfOps::get(s);
    const auto& ctx = *s.ctx;
    auto one = AlgebraElement::unit(s);

    CHECK(H.coproduct(one) == TensorElement::unit(s, 2));
    CHECK(H.coproduct(gen(s, GK1)) == TensorElement::of(gen(s, GK1), gen(s, GK1)));

    // Δ(f3) = (q^-1 - q) f2 ⊗ f1 k2^-1 + 1 ⊗ f3 + f3 ⊗ k1^-1 k2^-1
    auto f1k2i = gen(s, GF1) * gen(s, GK2, s.d - 1);
    auto k1ik2i = gen(s, GK1, s.d - 1) * gen(s, GK2, s.d - 1);
    auto expected = TensorElement::of(gen(s, GF2).scaled(q_power(ctx, -1) - q_power(ctx, 1)), f1k2i) +
                    TensorElement::of(one, gen(s, GF3)) + TensorElement::of(gen(s, GF3), k1ik2i);
    CHECK(H.coproduct(gen(s, GF3)) == expected);

    // Δ is an algebra morphism: Δ(f3) must also equal Δ(f2)Δ(f1) - q Δ(f1)Δ(f2)
    auto viaprod = H.coproduct(gen(s, GF2)) * H.coproduct(gen(s, GF1)) -
                   (H.coproduct(gen(s, GF1)) * H.coproduct(gen(s, GF2))).scaled(q_power(ctx, 1));
    CHECK(H.coproduct(gen(s, GF3)) == viaprod);
}

TEST_CASE("counit and antipode tables") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 5);
    const auto& H = HopfOps::get(s);
    const auto& ctx = *s.ctx;

    for (int a = 0; a < s.d; ++a)
        for (int b = 0; b < s.d; ++b)
            CHECK(H.counit(gen(s, GK1, a) * gen(s, GK2, b)).is_one());
    CHECK(H.counit(gen(s, GE3)).is_zero());

    // S(f3) = (q - q^3) f1 f2 k1 k2 - q^2 f3 k1 k2
    auto expect = (gen(s, GF1) * gen(s, GF2) * gen(s, GK1) * gen(s, GK2))
                      .scaled(q_power(ctx, 1) - q_power(ctx, 3)) -
                  (gen(s, GF3) * gen(s, GK1) * gen(s, GK2)).scaled(q_power(ctx, 2));
    CHECK(H.antipode(gen(s, GF3)) == expect);

    // consistency with anti-multiplicativity: f3 = f2 f1 - q f1 f2
    auto via = H.antipode(gen(s, GF2) * gen(s, GF1)) - H.antipode(gen(s, GF1) * gen(s, GF2)).scaled(q_power(ctx, 1));
    CHECK(H.antipode(gen(s, GF3)) == via);

    CHECK(H.antipode_inv(H.antipode(gen(s, GE2))) == gen(s, GE2));
    CHECK(H.antipode(H.antipode_inv(gen(s, GF3))) == gen(s, GF3));
}

TEST_CASE("hopf axioms on generators and random monomials") {
    for (auto kind : {AlgKind::UBar, AlgKind::BPlus, AlgKind::BMinus, AlgKind::DualX}) {
        for (int d : {3, 5}) {
            const auto& s = AlgebraSpec::get(kind, d);
            auto samples = all_generators(s);
            Rng rng(17);
            for (int t = 0; t < 8; ++t)
                samples.push_back(AlgebraElement::monomial(s, random_monomial(s, rng)));
            std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
            for (int t = 0; t < 6; ++t)
                pairs.emplace_back(AlgebraElement::monomial(s, random_monomial(s, rng)),
                                   AlgebraElement::monomial(s, random_monomial(s, rng)));
            pairs.emplace_back(gen(s, s.gen[0]), gen(s, s.gen[s.ngens - 1]));
            auto rep = check_hopf_axioms(s, samples, pairs);
            if (!rep.all_pass()) {
                auto* f = rep.first_failure();
                FAIL(rep.suite, ": ", f->check, " on ", f->input, "\n lhs=", f->lhs, "\n rhs=", f->rhs);
            }
            auto rep2 = check_antipode_identities(s, samples);
            if (!rep2.all_pass()) {
                auto* f = rep2.first_failure();
                FAIL(rep2.suite, ": ", f->check, " on ", f->input, "\n lhs=", f->lhs, "\n rhs=", f->rhs);
            }
        }
    }
}

TEST_CASE("iterated coproduct and coassociativity") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
    const auto& H = HopfOps::get(s);
    auto x = gen(s, GE3) * gen(s, GF1);
    auto d2a = H.coproduct_leg(H.coproduct(x), 0);
    auto d2b = H.coproduct_leg(H.coproduct(x), 1);
    CHECK(d2a == d2b);
    CHECK(H.iterated_coproduct(x, 3) == d2a);
}

TEST_CASE("q-binomial expansion of coproduct powers") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 5);
    const auto& H = HopfOps::get(s);
    const auto& ctx = *s.ctx;
    // Δ(e1)^n = Σ_k q^{k(n-k)} {n k} e1^k k1^(n-k) ⊗ e1^(n-k), for yx = q^2 xy
    for (int n = 1; n < s.d; ++n) {
        TensorElement expect(s, 2);
        for (int k = 0; k <= n; ++k) {
            auto c = gauss_binomial(ctx, n, k).times_q_power((long)k * (n - k));
            expect = expect + TensorElement::of(gen(s, GE1, k) * gen(s, GK1, n - k), gen(s, GE1, n - k)).scaled(c);
        }
        CHECK(H.coproduct(gen(s, GE1, n)) == expect);
    }
}

TEST_CASE("coproduct of e1^d collapses to zero in the quotient") {
    for (int d : {3, 5}) {
        const auto& s = AlgebraSpec::get(AlgKind::UBar, d);
        const auto& H = HopfOps::get(s);
        TensorElement acc = TensorElement::unit(s, 2);
        TensorElement de1 = H.coproduct(AlgebraElement::generator(s, GE1));
        for (int i = 0; i < d; ++i) acc = acc * de1;
        CHECK(acc.is_zero());
    }
}

TEST_CASE("flip and embed3") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
    auto e2 = gen(s, GE2), f2 = gen(s, GF2);
    auto t = TensorElement::of(e2, f2);
    CHECK(t.flip() == TensorElement::of(f2, e2).scaled(-Scalar::one(*s.ctx)));
    CHECK(t.flip().flip() == t);

    auto emb = t.embed3(0, 2);
    REQUIRE(emb.arity() == 3);
    auto expect = TensorElement::of(e2, AlgebraElement::unit(s), f2);
    CHECK(emb == expect);
}
