#pragma once

#include "superq/hopf.hpp"

namespace superq {

/// The dual Hopf superalgebra X = ((B_q^+)^op)^* realized two ways at once:
/// as a standalone PBW algebra (AlgKind::DualX) and as functionals on the
/// B_q^+ basis. The functional coordinates are built from the five defining
/// functionals by convolution against the B_q^+ coproduct, so agreement of
/// the two descriptions is a genuine cross-check (dual_consistency_check).
class DualSide {
public:
    static const DualSide& get(int d);

    int d() const { return d_; }
    const AlgebraSpec& x_spec() const { return *x_; }
    const AlgebraSpec& bplus_spec() const { return *b_; }

    const std::vector<Expos>& bplus_basis() const { return b_basis_; }
    const std::vector<Expos>& x_basis() const { return x_basis_; }
    int bplus_index(const Expos& e) const;
    int x_index(const Expos& e) const;

    /// Value of one of the five defining functionals on a basis monomial.
    Scalar generator_functional(int xgen, const Expos& bmono) const;

    /// Functional coordinates of every X PBW monomial over the dual basis:
    /// coords()[x_index][bplus_index].
    const std::vector<std::vector<Scalar>>& coords() const { return coords_; }

    /// Evaluation of an X element (as a functional) on a B_q^+ element.
    Scalar dual_eval(const AlgebraElement& f, const AlgebraElement& b) const;

    /// Image of a dual-basis functional (m)^* in X PBW coordinates (the
    /// explicit coefficient families), indexed by bplus_index.
    const std::vector<AlgebraElement>& dual_basis_to_x() const { return dual_to_x_; }

    /// Convolution product of functionals evaluated on one monomial:
    /// (f * g)(m) = Σ (-1)^{|g||m'|} f(m') g(m'').
    Scalar convolve_eval(const std::vector<int>& xgens, const Expos& bmono) const;

    /// X PBW multiplication vs functional convolution on all generator
    /// pairs against every basis monomial, plus the unit/epsilon laws and
    /// the alpha_k^d = 1 functional identities.
    Report consistency_check() const;

private:
    explicit DualSide(int d);
    int d_;
    const AlgebraSpec* x_;
    const AlgebraSpec* b_;
    std::vector<Expos> b_basis_, x_basis_;
    std::map<Expos, int> b_index_, x_index_;
    std::vector<std::vector<Scalar>> coords_;
    std::vector<AlgebraElement> dual_to_x_;
};

} // namespace superq
