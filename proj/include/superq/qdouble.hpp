#pragma once

#include "superq/dual.hpp"

namespace superq {

/// Element of the quantum double D = X ⋈ B_q^+: a sparse combination of
/// basis pairs (X PBW monomial, B_q^+ PBW monomial).
class DoubleElement {
public:
    using Key = std::pair<Expos, Expos>;

    DoubleElement() : d_(0) {}
    explicit DoubleElement(int d) : d_(d) {}

    static DoubleElement unit(int d);
    static DoubleElement x_side(int d, const AlgebraElement& f);        // f ⊗ 1
    static DoubleElement h_side(int d, const AlgebraElement& a);        // 1 ⊗ a
    static DoubleElement of(const AlgebraElement& f, const AlgebraElement& a);

    int d() const { return d_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(const Expos& x, const Expos& b, const Scalar& c);
    DoubleElement& operator+=(const DoubleElement& o);
    bool operator==(const DoubleElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

private:
    int d_;
    std::map<Key, Scalar> terms_;
};

/// Bicrossed-product multiplication
///   (f ⊗ a)(g ⊗ b) = Σ (-1)^{|g||a| + |a''||a'| + |x||(a')'|}
///                      f g(S^-1(a'') ? (a')') ⊗ (a')'' b,
/// with g(u ? v) the functional x -> g(u x v).
DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y);

/// The epimorphism chi: D -> UBar, basis-wise
///   alpha-monomial ⊗ k1^{i2} k2^{j2} e1^r e3^h e2^t
///     -> f1^w f3^s f2^l k1^{i1+i2} k2^{j1+j2} e1^r e3^h e2^t.
AlgebraElement chi(const DoubleElement& x);

/// All 25 cross relations of the double, their chi images, and the
/// embedding law (f ⊗ 1)(1 ⊗ a) = f ⊗ a.
Report double_relations_check(int d);

} // namespace superq
