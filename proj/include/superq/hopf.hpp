#pragma once

#include <mutex>

#include "superq/reports.hpp"
#include "superq/tensor.hpp"

namespace superq {

/// Hopf-superalgebra structure maps for one PBW spec. Generator images
/// come straight from the defining tables; Δ and ε extend multiplicatively,
/// S and S^-1 anti-multiplicatively with the Koszul sign
/// S(xy) = (-1)^{|x||y|} S(y) S(x).
class HopfOps {
public:
    static const HopfOps& get(const AlgebraSpec& spec);

    const AlgebraSpec& spec() const { return *spec_; }

    TensorElement coproduct(const AlgebraElement& x) const;
    TensorElement coproduct_monomial(const Expos& e) const;
    Scalar counit(const AlgebraElement& x) const;
    Scalar counit_monomial(const Expos& e) const;
    AlgebraElement antipode(const AlgebraElement& x) const;
    AlgebraElement antipode_monomial(const Expos& e) const;
    AlgebraElement antipode_inv(const AlgebraElement& x) const;
    AlgebraElement antipode_inv_monomial(const Expos& e) const;

    /// Apply Δ to one leg of a tensor element (arity grows by one).
    TensorElement coproduct_leg(const TensorElement& t, int leg) const;

    /// Iterated coproduct Δ^(n-1) as an arity-n element (n >= 1; n = 1 is
    /// the identity embedding).
    TensorElement iterated_coproduct(const AlgebraElement& x, int n) const;

    /// Δ^op = τ ∘ Δ.
    TensorElement coproduct_op(const AlgebraElement& x) const;

private:
    explicit HopfOps(const AlgebraSpec& spec);
    const AlgebraSpec* spec_;
    // per position: images of the generator power g^e, e within cap
    std::vector<std::vector<TensorElement>> delta_pow_;
    std::vector<std::vector<AlgebraElement>> s_pow_;
    std::vector<std::vector<AlgebraElement>> sinv_pow_;
    std::vector<Scalar> eps_;
    // monomial image memos (a monomial's image never changes; the axiom
    // sweeps revisit the same legs constantly)
    mutable std::mutex memo_mu_;
    mutable std::map<Expos, TensorElement> delta_memo_;
    mutable std::map<Expos, AlgebraElement> s_memo_;
    mutable std::map<Expos, AlgebraElement> sinv_memo_;
};

/// Executable Hopf axioms on a sample set: coassociativity, both counit
/// laws, both antipode laws for each sample; Δ-morphism on each pair.
/// Results carry the first counterexample sides.
Report check_hopf_axioms(const AlgebraSpec& spec,
                         const std::vector<AlgebraElement>& samples,
                         const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs);

/// Extra identities: ε∘S = ε and (S⊗S)∘τ∘Δ = Δ∘S, plus S∘S^-1 = id,
/// on the given samples.
Report check_antipode_identities(const AlgebraSpec& spec, const std::vector<AlgebraElement>& samples);

} // namespace superq
