#pragma once

#include "superq/rep.hpp"

namespace superq {

/// Word in the braid generators g_1 .. g_{n-1}, stored as 1-based indices.
using BraidWord = std::vector<int>;

/// Length-then-lexicographic order with 1 < g_1 < g_2 < ...
bool deglex_less(const BraidWord& a, const BraidWord& b);

std::string word_to_string(const BraidWord& w);

/// id^(i-1) ⊗ c ⊗ id^(n-i-1) acting on V^{⊗n} (4^n x 4^n), 1 <= i <= n-1.
SparseMat braid_generator(const RepContext& rc, int n, int i);

/// Matrix of a braid word under the representation.
SparseMat word_matrix(const RepContext& rc, int n, const BraidWord& w);

struct CentralizerBasis {
    int n;
    std::vector<BraidWord> words;
    std::vector<SparseMat> matrices; // aligned with words
};

/// Greedy deglex scan: skip words containing a reducible pattern
/// (g_i g_i g_i, far commutations g_j g_i with j >= i+2, the braid pattern
/// g_{i+1} g_i g_{i+1}, and for n = 4 the three extra excluded subwords),
/// accept a word iff its matrix is independent of the accepted span.
/// The scan stops once a whole word length adds nothing and the span is
/// closed under left/right multiplication by every generator.
CentralizerBasis enumerate_centralizer_basis(const RepContext& rc, int n, int cap = 4);

/// The cubic minimal relation, the explicit inverse formula, and the
/// eigenvalue structure of g_1 on V ⊗ V.
Report verify_minimal_relations(const RepContext& rc);

/// Braid/far-commutation relations, the cubic for every generator, and the
/// Yang-Baxter identity on V^{⊗3}, all as exact matrix identities.
Report verify_braid_relations(const RepContext& rc, int n);

/// The two quintic generating relations and the three auxiliary
/// identities of the three-strand algebra, as 64 x 64 identities.
Report verify_l3_relations(const RepContext& rc);

/// Span equality of the inductive decomposition
///   L_n = Σ_{i<=2} L_{n-1} g_{n-1}^i L_{n-1} + L_{n-3} g_{n-1} g_{n-2}^2 g_{n-1}
/// against the enumerated basis, n in {3, 4}.
Report verify_decomposition(const RepContext& rc, int n, int cap = 4);

/// Dimension of {M : M rho_n(g) = rho_n(g) M for all 8 generators},
/// via the nullspace of the stacked commutator system restricted to the
/// weight-block entries forced by the two diagonal generators.
long commutant_dimension(const RepContext& rc, int n, int cap = 3);

/// The twenty listed three-strand basis words, in the listed order.
std::vector<BraidWord> b3_reference_words();

/// Literal expansion of the displayed four-strand basis; evaluates the
/// two readings of the "<" conditions (deglex vs listed position) and
/// requires them to agree.
std::vector<BraidWord> b4_reference_words();

} // namespace superq
