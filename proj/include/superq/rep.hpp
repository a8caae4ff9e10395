#pragma once

#include "superq/matrix.hpp"
#include "superq/rmatrix.hpp"

namespace superq {

/// The 4-dimensional typical highest-weight module at (d, mu), mu an
/// integer residue mod d with [mu][1+mu] != 0. Basis order
/// (0,0) < (1,0) < (0,1) < (1,1) on the (sigma, rho) indices; the basis
/// vector parity is sigma+rho mod 2 (highest weight vector even, odd
/// generators flip parity).
class RepContext {
public:
    static const RepContext& get(int d, long mu); // throws InvalidMu

    static bool mu_valid(int d, long mu);

    int d() const { return d_; }
    long mu() const { return mu_; }
    const FieldContext& ctx() const { return *ctx_; }
    const AlgebraSpec& algebra() const { return *spec_; }

    static int vector_parity(int idx) { return (idx == 1 || idx == 2) ? 1 : 0; }
    /// Parity of a basis vector of V^{⊗n} (sum of digit parities, base 4).
    static int tuple_parity(long idx, int n);

    /// 4x4 action of one generator.
    const SparseMat& gen_action(int gen_id) const;
    /// 4x4 action of a PBW monomial (memoized).
    const SparseMat& monomial_action(const Expos& e) const;

    /// rho_{n,mu}: action of the iterated coproduct on V^{⊗n}, with the
    /// Koszul sign (an odd factor acting across an odd vector).
    SparseMat rho_n(const AlgebraElement& x, int n) const;

    /// Signed action of an arity-2 tensor element on V ⊗ V.
    SparseMat act2(const TensorElement& t) const;

    /// Image of the universal R-matrix on V ⊗ V (16x16).
    const SparseMat& rbar_vv() const;

    /// Braiding operator c = q^{-2 mu^2} tau ∘ rbar (16x16).
    const SparseMat& c_matrix() const;

private:
    RepContext(int d, long mu);
    int d_;
    long mu_;
    const FieldContext* ctx_;
    const AlgebraSpec* spec_;
    std::vector<SparseMat> gen_action_;
    mutable std::mutex memo_mu_;
    mutable std::map<Expos, SparseMat> act_memo_;
    mutable std::map<std::pair<int, Expos>, SparseMat> rho_memo_;
    mutable std::optional<SparseMat> rbar_vv_;
    mutable std::optional<SparseMat> c_;

    SparseMat rho_monomial(const Expos& e, int n) const;
};

/// Representation fidelity suite: defining relations as 4x4 identities,
/// central elements acting as zero, the displayed rbar image on V ⊗ V,
/// the 16 braiding-operator equations, the intertwiner property of c,
/// and rho_n multiplicativity on sampled pairs.
Report check_rep(const RepContext& rc, unsigned long seed = 0);

} // namespace superq
