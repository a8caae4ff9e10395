#pragma once

#include <functional>

#include "superq/algebra.hpp"

namespace superq {

/// Key of one tensor term: a tuple of PBW monomials, one per leg.
/// Arity is capped at 3 (all computations here live in H, H⊗H or H⊗H⊗H);
/// unused legs stay at the zero exponent tuple.
using TensorKey = std::array<Expos, 3>;

/// Sparse element of spec^{⊗arity} with Z2-graded (Koszul) multiplication:
/// (a1⊗...⊗ak)(b1⊗...⊗bk) = (-1)^{Σ_{i>j} |a_i||b_j|} a1b1 ⊗ ... ⊗ akbk.
class TensorElement {
public:
    TensorElement() : spec_(nullptr), arity_(0) {}
    TensorElement(const AlgebraSpec& spec, int arity) : spec_(&spec), arity_(arity) {}

    static TensorElement unit(const AlgebraSpec& spec, int arity);
    /// a ⊗ b (arity 2), distributing over the terms of both elements.
    static TensorElement of(const AlgebraElement& a, const AlgebraElement& b);
    static TensorElement of(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

    const AlgebraSpec& spec() const { return *spec_; }
    int arity() const { return arity_; }
    const std::map<TensorKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const TensorKey& k, const Scalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement scaled(const Scalar& c) const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    int key_parity(const TensorKey& k, int leg) const { return spec_->monomial_parity(k[leg]); }

    /// Koszul flip of an arity-2 element: a⊗b -> (-1)^{|a||b|} b⊗a.
    TensorElement flip() const;

    /// Embed an arity-2 element into arity 3 on the given pair of legs
    /// (R_12, R_13, R_23 style).
    TensorElement embed3(int leg_a, int leg_b) const;

    /// Apply an element-valued map to one leg, distributing the result
    /// (used for S, S^-1 on legs; the maps are even so no sign appears).
    TensorElement map_leg(int leg, const std::function<AlgebraElement(const Expos&)>& fn) const;

    /// Contract one leg with a scalar-valued map (counit-style).
    TensorElement contract_leg(int leg, const std::function<Scalar(const Expos&)>& fn) const;

    /// Drop to an AlgebraElement by multiplying the legs left to right.
    AlgebraElement multiply_out() const;

    std::string to_string() const;

private:
    const AlgebraSpec* spec_;
    int arity_;
    std::map<TensorKey, Scalar> terms_;
};

} // namespace superq
