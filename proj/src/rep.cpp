#include "superq/rep.hpp"

#include <mutex>

namespace superq {

namespace {
constexpr int PF1 = 0, PF3 = 1, PF2 = 2, PK1 = 3, PK2 = 4, PE1 = 5, PE3 = 6, PE2 = 7;
} // namespace

bool RepContext::mu_valid(int d, long mu) {
    const FieldContext& ctx = FieldContext::get(d);
    return !(q_int(ctx, mu) * q_int(ctx, mu + 1)).is_zero();
}

const RepContext& RepContext::get(int d, long mu) {
    static std::mutex mu_guard;
    static std::map<std::pair<int, long>, std::unique_ptr<RepContext>> cache;
    std::lock_guard<std::mutex> lock(mu_guard);
    long m = ((mu % d) + d) % d;
    auto key = std::make_pair(d, m);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<RepContext>(new RepContext(d, m))).first;
    return *it->second;
}

RepContext::RepContext(int d, long mu) : d_(d), mu_(mu) {
    ctx_ = &FieldContext::get(d);
    spec_ = &AlgebraSpec::get(AlgKind::UBar, d);
    if (!mu_valid(d, mu)) throw InvalidMu((int)mu);
    const FieldContext& ctx = *ctx_;
    gen_action_.assign(8, SparseMat(ctx, 4, 4));
    auto& A = gen_action_;
    // k1 w_{s,r} = q^(r-s) w_{s,r};  k2 w_{s,r} = q^(mu+s) w_{s,r}
    A[PK1].set(0, 0, q_power(ctx, 0));
    A[PK1].set(1, 1, q_power(ctx, -1));
    A[PK1].set(2, 2, q_power(ctx, 1));
    A[PK1].set(3, 3, q_power(ctx, 0));
    A[PK2].set(0, 0, q_power(ctx, mu));
    A[PK2].set(1, 1, q_power(ctx, mu + 1));
    A[PK2].set(2, 2, q_power(ctx, mu));
    A[PK2].set(3, 3, q_power(ctx, mu + 1));
    // f1: w_{0,1} -> -q^-1 w_{1,0}
    A[PF1].set(1, 2, -q_power(ctx, -1));
    // f2: w_{s,0} -> w_{s,1}
    A[PF2].set(2, 0, Scalar::one(ctx));
    A[PF2].set(3, 1, Scalar::one(ctx));
    // f3: w_{0,r} -> (-1)^r q^-r w_{1,r}
    A[PF3].set(1, 0, Scalar::one(ctx));
    A[PF3].set(3, 2, -q_power(ctx, -1));
    // e1: w_{1,0} -> -q w_{0,1}
    A[PE1].set(2, 1, -q_power(ctx, 1));
    // e2: w_{s,1} -> [mu+s] w_{s,0}
    A[PE2].set(0, 2, q_int(ctx, mu));
    A[PE2].set(1, 3, q_int(ctx, mu + 1));
    // e3: w_{1,r} -> (-1)^r q^r [mu+r] w_{0,r}
    A[PE3].set(0, 1, q_int(ctx, mu));
    A[PE3].set(2, 3, -(q_int(ctx, mu + 1).times_q_power(1)));
}

int RepContext::tuple_parity(long idx, int n) {
    int p = 0;
    for (int i = 0; i < n; ++i) {
        p ^= vector_parity((int)(idx & 3));
        idx >>= 2;
    }
    return p;
}

const SparseMat& RepContext::gen_action(int gen_id) const {
    int pos = spec_->position_of(gen_id);
    if (pos < 0) throw UnknownPair("generator not in UBar");
    return gen_action_[pos];
}

const SparseMat& RepContext::monomial_action(const Expos& e) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = act_memo_.find(e);
        if (it != act_memo_.end()) return it->second;
    }
    SparseMat m = SparseMat::identity(*ctx_, 4);
    for (int p = 0; p < 8; ++p)
        if (e[p] != 0) m = m * gen_action_[p].pow(e[p]);
    std::lock_guard<std::mutex> lock(memo_mu_);
    return act_memo_.emplace(e, std::move(m)).first->second;
}

namespace {

// action of (a (x) b) on V ⊗ W: column (j,J) -> (-1)^{|b| par(v_j)} A[.,j] B[.,J]
SparseMat signed_kron(const FieldContext& ctx, const SparseMat& A, const SparseMat& B, int parity_b) {
    SparseMat r(ctx, A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (const auto& [j, a] : A.row(i)) {
            bool flip = parity_b && RepContext::vector_parity(j);
            for (int I = 0; I < B.rows(); ++I)
                for (const auto& [J, b] : B.row(I)) {
                    Scalar v = a * b;
                    if (flip) v = -v;
                    r.add_to(i * B.rows() + I, j * B.cols() + J, v);
                }
        }
    return r;
}

} // namespace

SparseMat RepContext::rho_monomial(const Expos& e, int n) const {
    if (n == 1) return monomial_action(e);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = rho_memo_.find({n, e});
        if (it != rho_memo_.end()) return it->second;
    }
    const HopfOps& H = HopfOps::get(*spec_);
    TensorElement dx = H.coproduct_monomial(e);
    long dim = 1;
    for (int i = 0; i < n; ++i) dim *= 4;
    SparseMat acc(*ctx_, (int)dim, (int)dim);
    for (const auto& [k, c] : dx.terms()) {
        SparseMat rest = rho_monomial(k[1], n - 1);
        SparseMat m = signed_kron(*ctx_, monomial_action(k[0]), rest, spec_->monomial_parity(k[1]));
        acc = acc + m.scaled(c);
    }
    std::lock_guard<std::mutex> lock(memo_mu_);
    return rho_memo_.emplace(std::make_pair(n, e), std::move(acc)).first->second;
}

SparseMat RepContext::rho_n(const AlgebraElement& x, int n) const {
    if (n < 1) throw IndexError("rho_n requires n >= 1");
    long dim = 1;
    for (int i = 0; i < n; ++i) dim *= 4;
    SparseMat acc(*ctx_, (int)dim, (int)dim);
    for (const auto& [e, c] : x.terms()) acc = acc + rho_monomial(e, n).scaled(c);
    return acc;
}

SparseMat RepContext::act2(const TensorElement& t) const {
    SparseMat acc(*ctx_, 16, 16);
    for (const auto& [k, c] : t.terms()) {
        SparseMat m = signed_kron(*ctx_, monomial_action(k[0]), monomial_action(k[1]),
                                  spec_->monomial_parity(k[1]));
        acc = acc + m.scaled(c);
    }
    return acc;
}

const SparseMat& RepContext::rbar_vv() const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        if (rbar_vv_) return *rbar_vv_;
    }
    // R acts multiplicatively: the factored form is cheap on V ⊗ V
    SparseMat rt = act2(r_tilde(d_));
    SparseMat kk = act2(cartan_kernel(d_));
    SparseMat prod = rt * kk;
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (!rbar_vv_) rbar_vv_ = std::move(prod);
    return *rbar_vv_;
}

const SparseMat& RepContext::c_matrix() const {
    const SparseMat& rb = rbar_vv();
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (!c_) {
        // signed flip tau then the global q^(-2 mu^2)
        SparseMat tau(*ctx_, 16, 16);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                Scalar v = q_power(*ctx_, -2 * mu_ * mu_);
                if (vector_parity(a) && vector_parity(b)) v = -v;
                tau.set(b * 4 + a, a * 4 + b, v);
            }
        c_ = tau * rb;
    }
    return *c_;
}

Report check_rep(const RepContext& rc, unsigned long seed) {
    const FieldContext& ctx = rc.ctx();
    const AlgebraSpec& s = rc.algebra();
    Report rep;
    rep.suite = "rep_fidelity";
    rep.param("d", std::to_string(rc.d()));
    rep.param("mu", std::to_string(rc.mu()));
    long mu = rc.mu();
    int d = rc.d();

    auto G = [&](int g) { return rc.gen_action(g); };
    auto qp = [&](long n) { return q_power(ctx, n); };
    SparseMat id4 = SparseMat::identity(ctx, 4);

    // defining relations as 4x4 matrix identities
    rep.add(compare_check("k1k2=k2k1", "", G(GK1) * G(GK2), G(GK2) * G(GK1)));
    rep.add(compare_check("k1^d=1", "", G(GK1).pow(d), id4));
    rep.add(compare_check("k2^d=1", "", G(GK2).pow(d), id4));
    rep.add(compare_check("e1k1=q^-2k1e1", "", G(GE1) * G(GK1), (G(GK1) * G(GE1)).scaled(qp(-2))));
    rep.add(compare_check("e2k1=qk1e2", "", G(GE2) * G(GK1), (G(GK1) * G(GE2)).scaled(qp(1))));
    rep.add(compare_check("e1k2=qk2e1", "", G(GE1) * G(GK2), (G(GK2) * G(GE1)).scaled(qp(1))));
    rep.add(compare_check("e2k2=k2e2", "", G(GE2) * G(GK2), G(GK2) * G(GE2)));
    rep.add(compare_check("k1f1=q^-2f1k1", "", G(GK1) * G(GF1), (G(GF1) * G(GK1)).scaled(qp(-2))));
    rep.add(compare_check("k1f2=qf2k1", "", G(GK1) * G(GF2), (G(GF2) * G(GK1)).scaled(qp(1))));
    rep.add(compare_check("k2f1=qf1k2", "", G(GK2) * G(GF1), (G(GF1) * G(GK2)).scaled(qp(1))));
    rep.add(compare_check("k2f2=f2k2", "", G(GK2) * G(GF2), G(GF2) * G(GK2)));
    {
        Scalar inv = q_minus_qinv(ctx).inverse();
        SparseMat rhs = G(GF1) * G(GE1) + (G(GK1) - G(GK1).pow(d - 1)).scaled(inv);
        rep.add(compare_check("e1f1", "", G(GE1) * G(GF1), rhs));
        SparseMat rhs2 = (G(GF2) * G(GE2)).scaled(-Scalar::one(ctx)) +
                         (G(GK2) - G(GK2).pow(d - 1)).scaled(inv);
        rep.add(compare_check("e2f2", "", G(GE2) * G(GF2), rhs2));
    }
    rep.add(compare_check("e1f2=f2e1", "", G(GE1) * G(GF2), G(GF2) * G(GE1)));
    rep.add(compare_check("e2f1=f1e2", "", G(GE2) * G(GF1), G(GF1) * G(GE2)));
    rep.add(compare_check("e2^2=0", "", G(GE2) * G(GE2), SparseMat(ctx, 4, 4)));
    rep.add(compare_check("f2^2=0", "", G(GF2) * G(GF2), SparseMat(ctx, 4, 4)));
    {
        Scalar badge = qp(1) + qp(-1);
        SparseMat serre_e = G(GE1) * G(GE1) * G(GE2) - (G(GE1) * G(GE2) * G(GE1)).scaled(badge) +
                            G(GE2) * G(GE1) * G(GE1);
        SparseMat serre_f = G(GF1) * G(GF1) * G(GF2) - (G(GF1) * G(GF2) * G(GF1)).scaled(badge) +
                            G(GF2) * G(GF1) * G(GF1);
        rep.add(compare_check("serre_e", "", serre_e, SparseMat(ctx, 4, 4)));
        rep.add(compare_check("serre_f", "", serre_f, SparseMat(ctx, 4, 4)));
    }
    rep.add(compare_check("e3=e1e2-q^-1e2e1", "", G(GE3),
                          G(GE1) * G(GE2) - (G(GE2) * G(GE1)).scaled(qp(-1))));
    rep.add(compare_check("f3=f2f1-qf1f2", "", G(GF3),
                          G(GF2) * G(GF1) - (G(GF1) * G(GF2)).scaled(qp(1))));

    // central elements act trivially
    rep.add(compare_check("f1^d=0", "", G(GF1).pow(d), SparseMat(ctx, 4, 4)));
    rep.add(compare_check("e1^d=0", "", G(GE1).pow(d), SparseMat(ctx, 4, 4)));

    // parity bookkeeping: odd generators flip vector parity
    {
        CheckResult c;
        c.check = "parity_consistency";
        c.pass = true;
        for (int p = 0; p < 8 && c.pass; ++p) {
            const SparseMat& m = rc.gen_action(s.gen[p]);
            for (int i = 0; i < 4 && c.pass; ++i)
                for (const auto& [j, v] : m.row(i))
                    if (((RepContext::vector_parity(i) + RepContext::vector_parity(j)) & 1) != s.parity[p]) {
                        c.pass = false;
                        c.input = gen_name(s.gen[p]);
                        break;
                    }
        }
        rep.add(std::move(c));
    }

    // displayed image of rbar on V ⊗ V
    {
        SparseMat expect(ctx, 16, 16);
        auto qm = q_minus_qinv(ctx);
        for (int s1 = 0; s1 <= 1; ++s1)
            for (int r1 = 0; r1 <= 1; ++r1)
                for (int s2 = 0; s2 <= 1; ++s2)
                    for (int r2 = 0; r2 <= 1; ++r2) {
                        auto vid = [](int sg, int rh) { return sg == 0 ? (rh == 0 ? 0 : 2) : (rh == 0 ? 1 : 3); };
                        int col = vid(s1, r1) * 4 + vid(s2, r2);
                        long e0 = 2 * mu * mu + s1 * (r2 + mu) + r1 * (s2 + mu) + mu * (s2 + r2);
                        Scalar pre = q_power(ctx, e0);
                        expect.add_to(col, col, pre);
                        if (s1 == 1 && r1 == 1 && s2 == 0 && r2 == 0)
                            expect.add_to(vid(0, 0) * 4 + vid(1, 1), col,
                                          pre * (qm * qm * q_int(ctx, mu + 1) * q_int(ctx, mu)).times_q_power(1));
                        if (s1 == 1 && r1 == 0 && s2 == 0 && r2 == 1)
                            expect.add_to(vid(0, 1) * 4 + vid(1, 0), col, -(pre * qm));
                        if (r1 == 1 && r2 == 0)
                            expect.add_to(vid(s1, 0) * 4 + vid(s2, 1), col,
                                          (s1 ? Scalar::one(ctx) : -Scalar::one(ctx)) * pre * qm *
                                              q_int(ctx, mu + s1));
                        if (s1 == 1 && r1 == 0 && s2 == 0 && r2 == 1)
                            expect.add_to(vid(0, 0) * 4 + vid(1, 1), col, pre * qm * qm * q_int(ctx, mu));
                        if (s1 == 1 && s2 == 0)
                            expect.add_to(vid(0, r1) * 4 + vid(1, r2), col,
                                          ((1 + r2) % 2 == 0 ? Scalar::one(ctx) : -Scalar::one(ctx)) * pre *
                                              (qm * q_int(ctx, mu + r1)).times_q_power(r1 - r2));
                    }
        rep.add(compare_check("rbar_image_on_VV", "", rc.rbar_vv(), expect));
    }

    // the sixteen displayed braiding-operator equations
    {
        const SparseMat& c = rc.c_matrix();
        auto qm = q_minus_qinv(ctx);
        auto qi = [&](long n) { return q_int(ctx, n); };
        SparseMat expect(ctx, 16, 16);
        auto put = [&](int a, int b, int x, int y, const Scalar& v) { expect.add_to(x * 4 + y, a * 4 + b, v); };
        // column (a,b) lists c(w_a ⊗ w_b); indices 0=w00 1=w10 2=w01 3=w11
        put(0, 0, 0, 0, Scalar::one(ctx));
        put(1, 0, 0, 1, qp(mu));
        put(1, 0, 1, 0, -(qp(mu) * qm * qi(mu)));
        put(2, 0, 0, 2, qp(mu));
        put(2, 0, 2, 0, -(qp(mu) * qm * qi(mu)));
        put(3, 0, 0, 3, qp(2 * mu));
        put(3, 0, 3, 0, qp(2 * mu + 1) * qm * qm * qi(mu + 1) * qi(mu));
        put(3, 0, 2, 1, -(qp(2 * mu) * qm * qi(mu + 1)));
        put(3, 0, 1, 2, qp(2 * mu + 1) * qm * qi(mu + 1));
        put(0, 1, 1, 0, qp(mu));
        put(1, 1, 1, 1, -qp(2 * mu));
        put(2, 1, 1, 2, -qp(2 * mu + 1));
        put(2, 1, 3, 0, -(qp(2 * mu + 1) * qm * qi(mu)));
        put(3, 1, 1, 3, qp(3 * mu + 1));
        put(3, 1, 3, 1, qp(3 * mu + 1) * qm * qi(mu + 1));
        put(0, 2, 2, 0, qp(mu));
        put(1, 2, 2, 1, -qp(2 * mu + 1));
        put(1, 2, 3, 0, qp(2 * mu + 2) * qm * qi(mu));
        put(1, 2, 1, 2, qp(2 * mu + 1) * qm);
        put(2, 2, 2, 2, -qp(2 * mu));
        put(3, 2, 2, 3, qp(3 * mu + 1));
        put(3, 2, 3, 2, qp(3 * mu + 1) * qm * qi(mu + 1));
        put(0, 3, 3, 0, qp(2 * mu));
        put(1, 3, 3, 1, qp(3 * mu + 1));
        put(2, 3, 3, 2, qp(3 * mu + 1));
        put(3, 3, 3, 3, qp(4 * mu + 2));
        rep.add(compare_check("braiding_operator_table", "", c, expect));
    }

    // c intertwines the diagonal action: c rho_2(g) = rho_2(g) c
    for (int p = 0; p < 8; ++p) {
        auto g = AlgebraElement::generator(s, s.gen[p]);
        SparseMat r2 = rc.rho_n(g, 2);
        rep.add(compare_check("c_intertwiner", gen_name(s.gen[p]), rc.c_matrix() * r2, r2 * rc.c_matrix()));
    }

    // rho_n is an algebra morphism on sampled pairs
    {
        unsigned long state = seed * 2 + 1;
        auto next = [&state]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return state >> 33;
        };
        for (int t = 0; t < 6; ++t) {
            Expos a{}, b{};
            for (int p = 0; p < 8; ++p) {
                a[p] = (int)(next() % (unsigned long)s.cap[p]);
                b[p] = (int)(next() % (unsigned long)s.cap[p]);
            }
            auto xa = AlgebraElement::monomial(s, a);
            auto xb = AlgebraElement::monomial(s, b);
            for (int n = 1; n <= 2; ++n)
                rep.add(compare_check("rho_morphism_n" + std::to_string(n),
                                      xa.to_string() + " * " + xb.to_string(), rc.rho_n(xa * xb, n),
                                      rc.rho_n(xa, n) * rc.rho_n(xb, n)));
        }
    }
    return rep;
}

} // namespace superq
