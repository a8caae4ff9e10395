#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superq/qnum.hpp"

namespace superq {

/// The four PBW algebras the engine materializes. UBar is the full
/// quotient at a root of unity; BPlus/BMinus are its Borel subalgebras;
/// DualX is the dual Hopf superalgebra X presented by its own relation
/// table.
enum class AlgKind { UBar, BPlus, BMinus, DualX };

/// Generator identities used by the straightening rule table. The UBar
/// values are listed in PBW order f1 < f3 < f2 < k1 < k2 < e1 < e3 < e2;
/// the X generators mirror that order as ae1 < ae3 < ae2 < ak1 < ak2.
enum Gen : int { GF1 = 0, GF3, GF2, GK1, GK2, GE1, GE3, GE2, GAE1, GAE3, GAE2, GAK1, GAK2 };

const char* gen_name(int gen);

/// Exponent tuple of a PBW monomial; entries beyond the spec's generator
/// count stay zero. Comparison is lexicographic, which is the canonical
/// enumeration and serialization order.
using Expos = std::array<int, 8>;

constexpr int kMaxGens = 8;

/// Immutable description of one PBW algebra at a fixed odd d.
/// `ambient` (UBar only) lifts the quotient ideal: k-exponents range over
/// all integers and f1/e1 powers are never truncated; this is the ambient
/// algebra used by the centrality test.
class AlgebraSpec {
public:
    static const AlgebraSpec& get(AlgKind kind, int d, bool ambient = false);

    AlgKind kind;
    int d;
    bool ambient;
    int ngens;
    std::array<int, kMaxGens> gen;      // position -> Gen id
    std::array<int, kMaxGens> parity;   // position -> 0/1
    std::array<int, kMaxGens> cap;      // position -> d, 2, or 0 (uncapped)
    std::array<int, kMaxGens> cyclic;   // position -> 1 when g^d = 1 (k-type)
    const FieldContext* ctx;
    std::string name;                   // "ubar" | "bplus" | "bminus" | "x"

    int position_of(int gen_id) const;  // -1 when absent
    int monomial_parity(const Expos& e) const;
    bool valid_monomial(const Expos& e) const;

private:
    AlgebraSpec() = default;
};

/// Sparse F-linear combination of PBW monomials over one spec.
/// Terms are held in lexicographic monomial order with no zero
/// coefficients, so equal elements compare equal structurally.
class AlgebraElement {
public:
    AlgebraElement() : spec_(nullptr) {}
    explicit AlgebraElement(const AlgebraSpec& spec) : spec_(&spec) {}

    static AlgebraElement zero(const AlgebraSpec& spec) { return AlgebraElement(spec); }
    static AlgebraElement unit(const AlgebraSpec& spec);
    static AlgebraElement monomial(const AlgebraSpec& spec, const Expos& e, const Scalar& c);
    static AlgebraElement monomial(const AlgebraSpec& spec, const Expos& e);
    static AlgebraElement generator(const AlgebraSpec& spec, int gen_id, int exp = 1);

    const AlgebraSpec& spec() const { return *spec_; }
    const std::map<Expos, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Expos& e, const Scalar& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const; // PBW normal form
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// Parity when every term agrees, nullopt for mixed elements.
    std::optional<int> parity() const;

    std::string to_string() const;

private:
    const AlgebraSpec* spec_;
    std::map<Expos, Scalar> terms_;
};

/// [k1; n] = (q^n k1 - q^-n k1^-1)/(q - q^-1) as a two-term element.
AlgebraElement bracket_k1(const AlgebraSpec& spec, long n);

/// Deterministic basis enumeration in lexicographic exponent order.
std::vector<Expos> enumerate_basis(const AlgebraSpec& spec);
long basis_dim(const AlgebraSpec& spec);

/// Straightening core: adds coef * (normal form of the run word) into out.
/// A word is a sequence of (position, exponent) runs in the spec's
/// position alphabet.
using Word = std::vector<std::pair<int, int>>;
void straighten_into(const AlgebraSpec& spec, Word word, const Scalar& coef,
                     std::map<Expos, Scalar>& out);

/// Single-pair expansion g_a^m g_b^n with position(a) > position(b);
/// exposed for the confluence tests. Throws UnknownPair when no rule
/// exists for the generator pair.
AlgebraElement straighten_pair(const AlgebraSpec& spec, int pos_a, int exp_a, int pos_b, int exp_b);

} // namespace superq
