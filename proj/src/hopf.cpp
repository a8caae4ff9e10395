#include "superq/hopf.hpp"

#include <map>
#include <mutex>

namespace superq {

namespace {

using GenWord = std::vector<std::pair<int, int>>; // (Gen id, exponent)

AlgebraElement elem(const AlgebraSpec& s, const GenWord& gw, const Scalar& c) {
    Word w;
    for (auto [g, e] : gw) {
        int pos = s.position_of(g);
        if (pos < 0) throw UnknownPair("generator outside spec in hopf table");
        w.emplace_back(pos, e);
    }
    AlgebraElement r(s);
    std::map<Expos, Scalar> acc;
    straighten_into(s, std::move(w), c, acc);
    for (const auto& [e2, s2] : acc) r.add_term(e2, s2);
    return r;
}

struct GenTables {
    TensorElement delta;
    Scalar eps;
    AlgebraElement s;
    AlgebraElement sinv;
};

GenTables generator_tables(const AlgebraSpec& sp, int g) {
    const FieldContext& ctx = *sp.ctx;
    auto one = Scalar::one(ctx);
    auto qm = q_minus_qinv(ctx); // q - q^-1
    auto E = [&](const GenWord& gw, const Scalar& c) { return elem(sp, gw, c); };
    auto E1 = [&](const GenWord& gw) { return elem(sp, gw, one); };
    GenTables t;
    t.eps = Scalar::zero(ctx);
    switch (g) {
        case GK1:
        case GK2:
        case GAK1:
        case GAK2:
            t.delta = TensorElement::of(E1({{g, 1}}), E1({{g, 1}}));
            t.eps = one;
            t.s = E1({{g, -1}});
            t.sinv = E1({{g, -1}});
            break;
        case GE1:
            t.delta = TensorElement::of(E1({{GE1, 1}}), AlgebraElement::unit(sp)) +
                      TensorElement::of(E1({{GK1, 1}}), E1({{GE1, 1}}));
            t.s = E({{GK1, -1}, {GE1, 1}}, -one);
            t.sinv = E({{GK1, -1}, {GE1, 1}}, -q_power(ctx, 2));
            break;
        case GE2:
            t.delta = TensorElement::of(E1({{GE2, 1}}), AlgebraElement::unit(sp)) +
                      TensorElement::of(E1({{GK2, 1}}), E1({{GE2, 1}}));
            t.s = E({{GK2, -1}, {GE2, 1}}, -one);
            t.sinv = E({{GK2, -1}, {GE2, 1}}, -one);
            break;
        case GE3:
            t.delta = TensorElement::of(E({{GK2, 1}, {GE1, 1}}, qm), E1({{GE2, 1}})) +
                      TensorElement::of(E1({{GE3, 1}}), AlgebraElement::unit(sp)) +
                      TensorElement::of(E1({{GK1, 1}, {GK2, 1}}), E1({{GE3, 1}}));
            t.s = E({{GK1, -1}, {GK2, -1}, {GE1, 1}, {GE2, 1}}, one - q_power(ctx, -2)) +
                  E({{GK1, -1}, {GK2, -1}, {GE3, 1}}, -one);
            t.sinv = E({{GK1, -1}, {GK2, -1}, {GE1, 1}, {GE2, 1}}, q_power(ctx, 2) - one) +
                     E({{GK1, -1}, {GK2, -1}, {GE3, 1}}, -q_power(ctx, 2));
            break;
        case GF1:
            t.delta = TensorElement::of(E1({{GF1, 1}}), E1({{GK1, -1}})) +
                      TensorElement::of(AlgebraElement::unit(sp), E1({{GF1, 1}}));
            t.s = E({{GF1, 1}, {GK1, 1}}, -one);
            t.sinv = E({{GF1, 1}, {GK1, 1}}, -q_power(ctx, -2));
            break;
        case GF2:
            t.delta = TensorElement::of(E1({{GF2, 1}}), E1({{GK2, -1}})) +
                      TensorElement::of(AlgebraElement::unit(sp), E1({{GF2, 1}}));
            t.s = E({{GF2, 1}, {GK2, 1}}, -one);
            t.sinv = E({{GF2, 1}, {GK2, 1}}, -one);
            break;
        case GF3:
            t.delta = TensorElement::of(E1({{GF2, 1}}), E({{GF1, 1}, {GK2, -1}}, -qm)) +
                      TensorElement::of(AlgebraElement::unit(sp), E1({{GF3, 1}})) +
                      TensorElement::of(E1({{GF3, 1}}), E1({{GK1, -1}, {GK2, -1}}));
            t.s = E({{GF1, 1}, {GF2, 1}, {GK1, 1}, {GK2, 1}}, q_power(ctx, 1) - q_power(ctx, 3)) +
                  E({{GF3, 1}, {GK1, 1}, {GK2, 1}}, -q_power(ctx, 2));
            t.sinv = E({{GF1, 1}, {GF2, 1}, {GK1, 1}, {GK2, 1}}, q_power(ctx, -1) - q_power(ctx, 1)) +
                     E({{GF3, 1}, {GK1, 1}, {GK2, 1}}, -one);
            break;
        case GAE1:
            t.delta = TensorElement::of(E1({{GAE1, 1}}), E1({{GAK1, -1}})) +
                      TensorElement::of(AlgebraElement::unit(sp), E1({{GAE1, 1}}));
            t.s = E({{GAE1, 1}, {GAK1, 1}}, -one);
            t.sinv = E({{GAE1, 1}, {GAK1, 1}}, -q_power(ctx, -2));
            break;
        case GAE2:
            t.delta = TensorElement::of(E1({{GAE2, 1}}), E1({{GAK2, -1}})) +
                      TensorElement::of(AlgebraElement::unit(sp), E1({{GAE2, 1}}));
            t.s = E({{GAE2, 1}, {GAK2, 1}}, -one);
            t.sinv = E({{GAE2, 1}, {GAK2, 1}}, -one);
            break;
        case GAE3:
            t.delta = TensorElement::of(AlgebraElement::unit(sp), E1({{GAE3, 1}})) +
                      TensorElement::of(E1({{GAE3, 1}}), E1({{GAK1, -1}, {GAK2, -1}})) +
                      TensorElement::of(E({{GAE2, 1}}, q_power(ctx, -1) - q_power(ctx, 1)),
                                        E1({{GAE1, 1}, {GAK2, -1}}));
            t.s = E({{GAE1, 1}, {GAE2, 1}, {GAK1, 1}, {GAK2, 1}}, q_power(ctx, 1) - q_power(ctx, 3)) +
                  E({{GAE3, 1}, {GAK1, 1}, {GAK2, 1}}, -q_power(ctx, 2));
            // derived: S^-1 so that S(S^-1(ae3)) = ae3 (no table in the source material)
            t.sinv = E({{GAE1, 1}, {GAE2, 1}, {GAK1, 1}, {GAK2, 1}}, q_power(ctx, -1) - q_power(ctx, 1)) +
                     E({{GAE3, 1}, {GAK1, 1}, {GAK2, 1}}, -one);
            break;
        default:
            throw UnknownPair("no hopf table for generator");
    }
    return t;
}

} // namespace

const HopfOps& HopfOps::get(const AlgebraSpec& spec) {
    static std::mutex mu;
    static std::map<const AlgebraSpec*, std::unique_ptr<HopfOps>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&spec);
    if (it == cache.end()) it = cache.emplace(&spec, std::unique_ptr<HopfOps>(new HopfOps(spec))).first;
    return *it->second;
}

HopfOps::HopfOps(const AlgebraSpec& spec) : spec_(&spec) {
    if (spec.ambient) throw CapExceeded("hopf structure is materialized on the quotient algebras only");
    int n = spec.ngens;
    delta_pow_.resize(n);
    s_pow_.resize(n);
    sinv_pow_.resize(n);
    eps_.resize(n, Scalar::zero(*spec.ctx));
    for (int p = 0; p < n; ++p) {
        GenTables t = generator_tables(spec, spec.gen[p]);
        eps_[p] = t.eps;
        int cap = spec.cap[p];
        delta_pow_[p].resize(cap);
        s_pow_[p].resize(cap);
        sinv_pow_[p].resize(cap);
        delta_pow_[p][0] = TensorElement::unit(spec, 2);
        s_pow_[p][0] = AlgebraElement::unit(spec);
        sinv_pow_[p][0] = AlgebraElement::unit(spec);
        for (int e = 1; e < cap; ++e) {
            delta_pow_[p][e] = delta_pow_[p][e - 1] * t.delta;
            s_pow_[p][e] = s_pow_[p][e - 1] * t.s;
            sinv_pow_[p][e] = sinv_pow_[p][e - 1] * t.sinv;
        }
    }
}

TensorElement HopfOps::coproduct_monomial(const Expos& e) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = delta_memo_.find(e);
        if (it != delta_memo_.end()) return it->second;
    }
    TensorElement acc = TensorElement::unit(*spec_, 2);
    for (int p = 0; p < spec_->ngens; ++p)
        if (e[p] != 0) acc = acc * delta_pow_[p][e[p]];
    std::lock_guard<std::mutex> lock(memo_mu_);
    return delta_memo_.emplace(e, std::move(acc)).first->second;
}

TensorElement HopfOps::coproduct(const AlgebraElement& x) const {
    TensorElement acc(*spec_, 2);
    for (const auto& [e, c] : x.terms()) {
        TensorElement t = coproduct_monomial(e);
        for (const auto& [k, s] : t.terms()) acc.add_term(k, s * c);
    }
    return acc;
}

Scalar HopfOps::counit_monomial(const Expos& e) const {
    Scalar r = Scalar::one(*spec_->ctx);
    for (int p = 0; p < spec_->ngens; ++p) {
        if (e[p] == 0) continue;
        if (eps_[p].is_zero()) return Scalar::zero(*spec_->ctx);
        // grouplike generators have eps = 1; nothing to accumulate
    }
    return r;
}

Scalar HopfOps::counit(const AlgebraElement& x) const {
    Scalar r = Scalar::zero(*spec_->ctx);
    for (const auto& [e, c] : x.terms()) r += counit_monomial(e) * c;
    return r;
}

namespace {

// Koszul sign of reversing homogeneous factors: (-1)^{Σ_{i<j} |x_i||x_j|}.
int reversal_sign(const AlgebraSpec& s, const Expos& e) {
    int odd = 0;
    for (int p = 0; p < s.ngens; ++p)
        if ((e[p] * s.parity[p]) & 1) ++odd;
    return (odd * (odd - 1) / 2) & 1 ? -1 : 1;
}

} // namespace

AlgebraElement HopfOps::antipode_monomial(const Expos& e) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = s_memo_.find(e);
        if (it != s_memo_.end()) return it->second;
    }
    AlgebraElement acc = AlgebraElement::unit(*spec_);
    for (int p = 0; p < spec_->ngens; ++p)
        if (e[p] != 0) acc = s_pow_[p][e[p]] * acc; // reverse order fold
    if (reversal_sign(*spec_, e) < 0) acc = -acc;
    std::lock_guard<std::mutex> lock(memo_mu_);
    return s_memo_.emplace(e, std::move(acc)).first->second;
}

AlgebraElement HopfOps::antipode(const AlgebraElement& x) const {
    AlgebraElement acc(*spec_);
    for (const auto& [e, c] : x.terms()) {
        AlgebraElement t = antipode_monomial(e);
        for (const auto& [k, s] : t.terms()) acc.add_term(k, s * c);
    }
    return acc;
}

AlgebraElement HopfOps::antipode_inv_monomial(const Expos& e) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = sinv_memo_.find(e);
        if (it != sinv_memo_.end()) return it->second;
    }
    AlgebraElement acc = AlgebraElement::unit(*spec_);
    for (int p = 0; p < spec_->ngens; ++p)
        if (e[p] != 0) acc = sinv_pow_[p][e[p]] * acc;
    if (reversal_sign(*spec_, e) < 0) acc = -acc;
    std::lock_guard<std::mutex> lock(memo_mu_);
    return sinv_memo_.emplace(e, std::move(acc)).first->second;
}

AlgebraElement HopfOps::antipode_inv(const AlgebraElement& x) const {
    AlgebraElement acc(*spec_);
    for (const auto& [e, c] : x.terms()) {
        AlgebraElement t = antipode_inv_monomial(e);
        for (const auto& [k, s] : t.terms()) acc.add_term(k, s * c);
    }
    return acc;
}

TensorElement HopfOps::coproduct_leg(const TensorElement& t, int leg) const {
    if (t.arity() >= 3) throw ArityMismatch();
    TensorElement r(*spec_, t.arity() + 1);
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct_monomial(k[leg]);
        for (const auto& [dk, dc] : d.terms()) {
            TensorKey key{};
            int out = 0;
            for (int l = 0; l < t.arity(); ++l) {
                if (l == leg) {
                    key[out++] = dk[0];
                    key[out++] = dk[1];
                } else {
                    key[out++] = k[l];
                }
            }
            r.add_term(key, c * dc);
        }
    }
    return r;
}

TensorElement HopfOps::iterated_coproduct(const AlgebraElement& x, int n) const {
    TensorElement t(*spec_, 1);
    for (const auto& [e, c] : x.terms()) t.add_term(TensorKey{e, Expos{}, Expos{}}, c);
    for (int m = 1; m < n; ++m) t = coproduct_leg(t, 0);
    return t;
}

TensorElement HopfOps::coproduct_op(const AlgebraElement& x) const { return coproduct(x).flip(); }

Report check_hopf_axioms(const AlgebraSpec& spec,
                         const std::vector<AlgebraElement>& samples,
                         const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs) {
    const HopfOps& H = HopfOps::get(spec);
    Report rep;
    rep.suite = "hopf_axioms(" + spec.name + ")";
    rep.param("d", std::to_string(spec.d));
    auto eps_fn = [&](const Expos& e) { return H.counit_monomial(e); };
    auto s_fn = [&](const Expos& e) { return H.antipode_monomial(e); };

    for (const auto& x : samples) {
        std::string in = x.to_string();
        TensorElement dx = H.coproduct(x);

        rep.add(compare_check("coassociativity", in, H.coproduct_leg(dx, 0), H.coproduct_leg(dx, 1)));

        TensorElement x1(spec, 1);
        for (const auto& [e, c] : x.terms()) x1.add_term(TensorKey{e, Expos{}, Expos{}}, c);
        rep.add(compare_check("counit_left", in, dx.contract_leg(0, eps_fn), x1));
        rep.add(compare_check("counit_right", in, dx.contract_leg(1, eps_fn), x1));

        AlgebraElement eps_x = AlgebraElement::unit(spec).scaled(H.counit(x));
        rep.add(compare_check("antipode_left", in, dx.map_leg(0, s_fn).multiply_out(), eps_x));
        rep.add(compare_check("antipode_right", in, dx.map_leg(1, s_fn).multiply_out(), eps_x));

        rep.add(compare_check("antipode_inverse", in, H.antipode(H.antipode_inv(x)), x));
        rep.add(compare_check("antipode_inverse_op", in, H.antipode_inv(H.antipode(x)), x));
    }
    for (const auto& [x, y] : pairs) {
        std::string in = "(" + x.to_string() + ", " + y.to_string() + ")";
        rep.add(compare_check("coproduct_morphism", in, H.coproduct(x * y), H.coproduct(x) * H.coproduct(y)));
    }
    return rep;
}

Report check_antipode_identities(const AlgebraSpec& spec, const std::vector<AlgebraElement>& samples) {
    const HopfOps& H = HopfOps::get(spec);
    Report rep;
    rep.suite = "antipode_identities(" + spec.name + ")";
    rep.param("d", std::to_string(spec.d));
    auto s_fn = [&](const Expos& e) { return H.antipode_monomial(e); };
    for (const auto& x : samples) {
        std::string in = x.to_string();
        // ε ∘ S = ε
        CheckResult c1;
        c1.check = "eps_after_antipode";
        c1.input = in;
        Scalar lhs = H.counit(H.antipode(x)), rhs = H.counit(x);
        c1.pass = (lhs == rhs);
        if (!c1.pass) {
            c1.lhs = lhs.to_string();
            c1.rhs = rhs.to_string();
        }
        rep.add(std::move(c1));
        // τ ∘ (S⊗S) ∘ Δ = Δ ∘ S
        TensorElement l2 = H.coproduct(x).map_leg(0, s_fn).map_leg(1, s_fn).flip();
        rep.add(compare_check("tau_SS_coproduct", in, l2, H.coproduct(H.antipode(x))));
    }
    return rep;
}

} // namespace superq
