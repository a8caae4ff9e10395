#include "superq/qdouble.hpp"

namespace superq {

namespace {
constexpr int BK1 = 0, BK2 = 1, BE1 = 2, BE3 = 3, BE2 = 4;
constexpr int XE1 = 0, XE3 = 1, XE2 = 2, XK1 = 3, XK2 = 4;
constexpr int PF1 = 0, PF3 = 1, PF2 = 2, PK1 = 3, PK2 = 4, PE1 = 5, PE3 = 6, PE2 = 7;
} // namespace

DoubleElement DoubleElement::unit(int d) {
    DoubleElement e(d);
    e.terms_[{Expos{}, Expos{}}] = Scalar::one(FieldContext::get(d));
    return e;
}

DoubleElement DoubleElement::of(const AlgebraElement& f, const AlgebraElement& a) {
    DoubleElement e(f.spec().d);
    for (const auto& [fm, fc] : f.terms())
        for (const auto& [am, ac] : a.terms()) e.add_term(fm, am, fc * ac);
    return e;
}

DoubleElement DoubleElement::x_side(int d, const AlgebraElement& f) {
    return of(f, AlgebraElement::unit(AlgebraSpec::get(AlgKind::BPlus, d)));
}

DoubleElement DoubleElement::h_side(int d, const AlgebraElement& a) {
    return of(AlgebraElement::unit(AlgebraSpec::get(AlgKind::DualX, d)), a);
}

void DoubleElement::add_term(const Expos& x, const Expos& b, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{x, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}


DoubleElement& DoubleElement::operator+=(const DoubleElement& o) {
    if (d_ != o.d_) throw SpecMismatch();
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

std::string DoubleElement::to_string() const {
    if (terms_.empty()) return "0";
    const auto& xs = AlgebraSpec::get(AlgKind::DualX, d_);
    const auto& bs = AlgebraSpec::get(AlgKind::BPlus, d_);
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")*[" + AlgebraElement::monomial(xs, k.first).to_string() +
               " (x) " + AlgebraElement::monomial(bs, k.second).to_string() + "]";
    }
    return out;
}

DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y) {
    if (x.d() != y.d()) throw SpecMismatch();
    int d = x.d();
    const DualSide& D = DualSide::get(d);
    const AlgebraSpec& xs = D.x_spec();
    const AlgebraSpec& bs = D.bplus_spec();
    const HopfOps& HB = HopfOps::get(bs);
    const FieldContext& ctx = *bs.ctx;
    size_t nb = D.bplus_basis().size();
    DoubleElement out(d);

    for (const auto& [xk, cf] : x.terms()) {
        const Expos& fmono = xk.first;
        const Expos& amono = xk.second;
        int pa = bs.monomial_parity(amono);
        TensorElement d2a = HB.coproduct_leg(HB.coproduct_monomial(amono), 0);
        for (const auto& [yk, cg] : y.terms()) {
            const Expos& gmono = yk.first;
            const Expos& bmono = yk.second;
            int pg = xs.monomial_parity(gmono);
            const auto& grow = D.coords()[D.x_index(gmono)];
            Scalar cfg = cf * cg;
            if ((pg & pa) != 0) cfg = -cfg;

            for (const auto& [legs, c3] : d2a.terms()) {
                const Expos& u = legs[0];
                const Expos& v = legs[1];
                const Expos& w = legs[2];
                int pu = bs.monomial_parity(u);
                int pv = bs.monomial_parity(v);
                int pw = bs.monomial_parity(w);
                Scalar c = cfg * c3;
                if ((pw & (pu ^ pv)) != 0) c = -c;

                AlgebraElement sw = HB.antipode_inv_monomial(w);
                AlgebraElement uel = AlgebraElement::monomial(bs, u);
                // functional h(t) = (-1)^{|t||u|} g(S^-1(w) t u), in dual coords
                AlgebraElement hx(xs);
                for (size_t bt = 0; bt < nb; ++bt) {
                    const Expos& t = D.bplus_basis()[bt];
                    AlgebraElement p = sw * AlgebraElement::monomial(bs, t) * uel;
                    Scalar hval = Scalar::zero(ctx);
                    for (const auto& [pm, pc] : p.terms()) {
                        const Scalar& gval = grow[D.bplus_index(pm)];
                        if (!gval.is_zero()) hval += pc * gval;
                    }
                    if (hval.is_zero()) continue;
                    if (pu && bs.monomial_parity(t)) hval = -hval;
                    // expand (t)^* into X PBW coordinates
                    for (const auto& [xm, xc] : D.dual_basis_to_x()[bt].terms())
                        hx.add_term(xm, xc * hval);
                }
                if (hx.is_zero()) continue;
                AlgebraElement fX = AlgebraElement::monomial(xs, fmono) * hx;
                AlgebraElement vb = AlgebraElement::monomial(bs, v) * AlgebraElement::monomial(bs, bmono);
                for (const auto& [fm, fc2] : fX.terms())
                    for (const auto& [bm, bc2] : vb.terms()) out.add_term(fm, bm, c * fc2 * bc2);
            }
        }
    }
    return out;
}

AlgebraElement chi(const DoubleElement& x) {
    int d = x.d();
    const AlgebraSpec& u = AlgebraSpec::get(AlgKind::UBar, d);
    AlgebraElement out(u);
    for (const auto& [k, c] : x.terms()) {
        const Expos& xm = k.first;
        const Expos& bm = k.second;
        Expos e{};
        e[PF1] = xm[XE1];
        e[PF3] = xm[XE3];
        e[PF2] = xm[XE2];
        e[PK1] = (xm[XK1] + bm[BK1]) % d;
        e[PK2] = (xm[XK2] + bm[BK2]) % d;
        e[PE1] = bm[BE1];
        e[PE3] = bm[BE3];
        e[PE2] = bm[BE2];
        out.add_term(e, c);
    }
    return out;
}

Report double_relations_check(int d) {
    Report rep;
    rep.suite = "quantum_double";
    rep.param("d", std::to_string(d));
    const DualSide& D = DualSide::get(d);
    const AlgebraSpec& xs = D.x_spec();
    const AlgebraSpec& bs = D.bplus_spec();
    const FieldContext& ctx = *bs.ctx;
    Scalar inv = q_minus_qinv(ctx).inverse();

    auto X = [&](int g, int e = 1) { return AlgebraElement::generator(xs, g, e); };
    auto B = [&](int g, int e = 1) { return AlgebraElement::generator(bs, g, e); };
    auto side_x = [&](const AlgebraElement& f) { return DoubleElement::x_side(d, f); };
    auto side_h = [&](const AlgebraElement& a) { return DoubleElement::h_side(d, a); };

    struct Rel {
        int bgen;
        int xgen;
        DoubleElement rhs;
    };
    std::vector<Rel> rels;
    auto scalar_rel = [&](int bg, int xg, long qexp) {
        DoubleElement r = DoubleElement::of(X(xg), AlgebraElement::generator(bs, bg));
        DoubleElement scaled(d);
        for (const auto& [k, c] : r.terms()) scaled.add_term(k.first, k.second, c.times_q_power(qexp));
        rels.push_back({bg, xg, std::move(scaled)});
    };

    // k and grouplike rows: (1 ⊗ A)(alpha ⊗ 1) = q^c (alpha ⊗ A)
    scalar_rel(GK1, GAK1, 0);
    scalar_rel(GK2, GAK1, 0);
    scalar_rel(GE1, GAK1, -2);
    scalar_rel(GE2, GAK1, 1);
    scalar_rel(GE3, GAK1, -1);
    scalar_rel(GK1, GAK2, 0);
    scalar_rel(GK2, GAK2, 0);
    scalar_rel(GE1, GAK2, 1);
    scalar_rel(GE2, GAK2, 0);
    scalar_rel(GE3, GAK2, 1);
    scalar_rel(GK1, GAE1, -2);
    scalar_rel(GK2, GAE1, 1);
    scalar_rel(GE2, GAE1, 0);
    scalar_rel(GK1, GAE2, 1);
    scalar_rel(GK2, GAE2, 0);
    scalar_rel(GE1, GAE2, 0);
    scalar_rel(GK1, GAE3, -1);
    scalar_rel(GK2, GAE3, 1);

    // (1 ⊗ e1)(ae1 ⊗ 1) = -(q-q^-1)^-1 ak1^-1 ⊗ 1 + ae1 ⊗ e1 + (q-q^-1)^-1 1 ⊗ k1
    {
        DoubleElement r = side_x(X(GAK1, d - 1).scaled(-inv));
        r += DoubleElement::of(X(GAE1), B(GE1));
        r += side_h(B(GK1).scaled(inv));
        rels.push_back({GE1, GAE1, std::move(r)});
    }
    // (1 ⊗ e3)(ae1 ⊗ 1) = -q^-1 ak1^-1 ⊗ e2 + ae1 ⊗ e3
    {
        DoubleElement r = DoubleElement::of(X(GAK1, d - 1).scaled(-q_power(ctx, -1)), B(GE2));
        r += DoubleElement::of(X(GAE1), B(GE3));
        rels.push_back({GE3, GAE1, std::move(r)});
    }
    // (1 ⊗ e2)(ae2 ⊗ 1) = -(q-q^-1)^-1 ak2^-1 ⊗ 1 - ae2 ⊗ e2 + (q-q^-1)^-1 1 ⊗ k2
    {
        DoubleElement r = side_x(X(GAK2, d - 1).scaled(-inv));
        r += DoubleElement::of(-X(GAE2), B(GE2));
        r += side_h(B(GK2).scaled(inv));
        rels.push_back({GE2, GAE2, std::move(r)});
    }
    // (1 ⊗ e3)(ae2 ⊗ 1) = 1 ⊗ k2 e1 - ae2 ⊗ e3
    {
        DoubleElement r = side_h(B(GK2) * B(GE1));
        r += DoubleElement::of(-X(GAE2), B(GE3));
        rels.push_back({GE3, GAE2, std::move(r)});
    }
    // (1 ⊗ e1)(ae3 ⊗ 1) = ae3 ⊗ e1 - q ae2 ⊗ k1
    {
        DoubleElement r = DoubleElement::of(X(GAE3), B(GE1));
        r += DoubleElement::of(X(GAE2).scaled(-q_power(ctx, 1)), B(GK1));
        rels.push_back({GE1, GAE3, std::move(r)});
    }
    // (1 ⊗ e2)(ae3 ⊗ 1) = ae1 ak2^-1 ⊗ 1 - ae3 ⊗ e2
    {
        DoubleElement r = side_x(X(GAE1) * X(GAK2, d - 1));
        r += DoubleElement::of(-X(GAE3), B(GE2));
        rels.push_back({GE2, GAE3, std::move(r)});
    }
    // (1 ⊗ e3)(ae3 ⊗ 1) = -(q-q^-1)^-1 ak1^-1 ak2^-1 ⊗ 1 - ae3 ⊗ e3 + (q-q^-1)^-1 1 ⊗ k1 k2
    {
        DoubleElement r = side_x((X(GAK1, d - 1) * X(GAK2, d - 1)).scaled(-inv));
        r += DoubleElement::of(-X(GAE3), B(GE3));
        r += side_h((B(GK1) * B(GK2)).scaled(inv));
        rels.push_back({GE3, GAE3, std::move(r)});
    }

    if (rels.size() != 25) throw std::logic_error("expected 25 cross relations");

    for (const auto& rel : rels) {
        DoubleElement lhs = double_mul(side_h(AlgebraElement::generator(bs, rel.bgen)), side_x(X(rel.xgen)));
        std::string in = std::string("(1 (x) ") + gen_name(rel.bgen) + ")(" + gen_name(rel.xgen) + " (x) 1)";
        rep.add(compare_check("cross_relation", in, lhs, rel.rhs));

        // chi is multiplicative on the pair
        AlgebraElement lhs_u = chi(lhs);
        AlgebraElement rhs_u = chi(side_h(AlgebraElement::generator(bs, rel.bgen))) * chi(side_x(X(rel.xgen)));
        rep.add(compare_check("chi_morphism", in, lhs_u, rhs_u));
    }

    // (f ⊗ 1)(1 ⊗ a) = f ⊗ a on generator pairs
    for (int xg : {GAE1, GAE3, GAE2, GAK1, GAK2})
        for (int bg : {GK1, GK2, GE1, GE3, GE2}) {
            DoubleElement lhs = double_mul(side_x(X(xg)), side_h(B(bg)));
            DoubleElement rhs = DoubleElement::of(X(xg), B(bg));
            rep.add(compare_check("embedding_law",
                                  std::string("(") + gen_name(xg) + " (x) 1)(1 (x) " + gen_name(bg) + ")",
                                  lhs, rhs));
        }
    return rep;
}

} // namespace superq
