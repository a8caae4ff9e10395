// Acceptance suite: runs every verification gate end to end and prints one
// pass/fail line per criterion. All comparisons are exact identities in
// F = Q[q]/(Phi_d); there are no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <set>

#include "superq/centralizer.hpp"
#include "superq/dual.hpp"
#include "superq/qdouble.hpp"

using namespace superq;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool pass, double secs, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << what << " ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s)";
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    std::cout.flush();
    if (!pass) ++failures;
}

double secs_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

struct Rng {
    unsigned long state;
    explicit Rng(unsigned long seed) : state(seed * 2 + 1) {}
    unsigned long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    size_t below(size_t n) { return (size_t)(next() % (unsigned long)n); }
};

std::string first_fail(const Report& r) {
    const CheckResult* f = r.first_failure();
    if (!f) return "";
    return f->check + " on " + f->input;
}

} // namespace

int main() {
    // 1. PBW dimensions at d in {3, 5}
    {
        auto t0 = clk::now();
        bool ok = true;
        for (int d : {3, 5}) {
            long d4 = (long)d * d * d * d, d3 = (long)d * d * d;
            ok = ok && basis_dim(AlgebraSpec::get(AlgKind::UBar, d)) == 16 * d4;
            ok = ok && (long)enumerate_basis(AlgebraSpec::get(AlgKind::UBar, d)).size() == 16 * d4;
            ok = ok && (long)enumerate_basis(AlgebraSpec::get(AlgKind::BPlus, d)).size() == 4 * d3;
            ok = ok && (long)enumerate_basis(AlgebraSpec::get(AlgKind::BMinus, d)).size() == 4 * d3;
            ok = ok && (long)enumerate_basis(AlgebraSpec::get(AlgKind::DualX, d)).size() == 4 * d3;
        }
        line(1, "PBW dimensions 16*d^4 and 4*d^3 at d in {3,5}", ok, secs_since(t0));
    }

    // 2. Hopf axiom suite: exhaustive at d=3, 500 seeded samples at d=5
    {
        auto t0 = clk::now();
        std::string detail;
        bool ok = true;
        {
            const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
            auto basis = enumerate_basis(s);
            std::vector<AlgebraElement> samples;
            for (const auto& e : basis) samples.push_back(AlgebraElement::monomial(s, e));
            std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
            Rng rng(0);
            for (int p = 0; p < s.ngens; ++p)
                for (size_t i = 0; i < basis.size(); i += 8)
                    pairs.emplace_back(AlgebraElement::generator(s, s.gen[p]), samples[i]);
            for (int t = 0; t < 200; ++t)
                pairs.emplace_back(samples[rng.below(basis.size())], samples[rng.below(basis.size())]);
            Report rep = check_hopf_axioms(s, samples, pairs);
            ok = ok && rep.all_pass();
            if (!rep.all_pass()) detail = first_fail(rep);
        }
        {
            const auto& s5 = AlgebraSpec::get(AlgKind::UBar, 5);
            auto basis5 = enumerate_basis(s5);
            std::vector<AlgebraElement> samples;
            Rng rng(0);
            for (int t = 0; t < 500; ++t)
                samples.push_back(AlgebraElement::monomial(s5, basis5[rng.below(basis5.size())]));
            std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
            for (int p = 0; p < s5.ngens; ++p)
                for (int t = 0; t < 12; ++t)
                    pairs.emplace_back(AlgebraElement::generator(s5, s5.gen[p]),
                                       AlgebraElement::monomial(s5, basis5[rng.below(basis5.size())]));
            for (int t = 0; t < 10; ++t)
                pairs.emplace_back(AlgebraElement::monomial(s5, basis5[rng.below(basis5.size())]),
                                   AlgebraElement::monomial(s5, basis5[rng.below(basis5.size())]));
            Report rep = check_hopf_axioms(s5, samples, pairs);
            ok = ok && rep.all_pass();
            if (detail.empty() && !rep.all_pass()) detail = first_fail(rep);
        }
        line(2, "Hopf axioms exhaustive at d=3 and 500 seeded samples at d=5", ok, secs_since(t0), detail);
    }

    // 3. Dual consistency at d=3: generator pairs against all 108 monomials
    {
        auto t0 = clk::now();
        Report rep = DualSide::get(3).consistency_check();
        line(3, "dual X: PBW product vs functional convolution at d=3", rep.all_pass(), secs_since(t0),
             first_fail(rep));
    }

    // 4. Quantum double: 25 cross relations and chi multiplicativity, d in {3,5}
    {
        auto t0 = clk::now();
        bool ok = true;
        std::string detail;
        for (int d : {3, 5}) {
            Report rep = double_relations_check(d);
            ok = ok && rep.all_pass();
            if (detail.empty() && !rep.all_pass()) detail = "d=" + std::to_string(d) + ": " + first_fail(rep);
        }
        line(4, "quantum double cross relations and chi at d in {3,5}", ok, secs_since(t0), detail);
    }

    // 5. R-matrix form equality at d in {3,5}
    {
        auto t0 = clk::now();
        bool ok = true;
        std::string detail;
        for (int d : {3, 5}) {
            Report rep = verify_rmatrix_forms(d);
            ok = ok && rep.all_pass();
            if (detail.empty() && !rep.all_pass()) detail = "d=" + std::to_string(d);
        }
        line(5, "r_multiplicative = r_coefficient term by term, d in {3,5}", ok, secs_since(t0), detail);
    }

    // 6. Quasitriangularity: full suite + abstract YBE at d=3; generator
    //    level at d=5
    {
        auto t0 = clk::now();
        Report rep3 = verify_quasitriangular(3, /*full=*/true, /*abstract_ybe=*/true);
        Report rep5 = verify_quasitriangular(5, /*full=*/false, /*abstract_ybe=*/false);
        bool ok = rep3.all_pass() && rep5.all_pass();
        std::string detail = !rep3.all_pass() ? "d=3: " + first_fail(rep3)
                                              : (!rep5.all_pass() ? "d=5: " + first_fail(rep5) : "");
        line(6, "quasitriangularity (full + YBE at d=3, generator level at d=5)", ok, secs_since(t0),
             detail);
    }

    // 7. Representation fidelity for d in {5,7}, every valid mu
    {
        auto t0 = clk::now();
        bool ok = true;
        std::string detail;
        for (int d : {5, 7}) {
            for (long mu = 0; mu < d; ++mu) {
                if (!RepContext::mu_valid(d, mu)) continue;
                Report rep = check_rep(RepContext::get(d, mu), 0);
                ok = ok && rep.all_pass();
                if (detail.empty() && !rep.all_pass())
                    detail = "d=" + std::to_string(d) + " mu=" + std::to_string(mu) + ": " + first_fail(rep);
            }
        }
        line(7, "representation fidelity incl. 16 braiding equations, d in {5,7}, all valid mu", ok,
             secs_since(t0), detail);
    }

    // 8. Braid, far-commutation, cubic, inverse formula, YBE on V^3 for
    //    n <= 4, d in {5,7}, mu in {1,2}
    {
        auto t0 = clk::now();
        bool ok = true;
        std::string detail;
        for (int d : {5, 7})
            for (long mu : {1L, 2L}) {
                const RepContext& rc = RepContext::get(d, mu);
                Report m = verify_minimal_relations(rc);
                ok = ok && m.all_pass();
                if (detail.empty() && !m.all_pass()) detail = first_fail(m);
                for (int n = 2; n <= 4; ++n) {
                    Report rep = verify_braid_relations(rc, n);
                    ok = ok && rep.all_pass();
                    if (detail.empty() && !rep.all_pass())
                        detail = "d=" + std::to_string(d) + " mu=" + std::to_string(mu) +
                                 " n=" + std::to_string(n) + ": " + first_fail(rep);
                }
            }
        line(8, "braid/cubic/inverse identities for n<=4, d in {5,7}, mu in {1,2}", ok, secs_since(t0),
             detail);
    }

    // 9. Centralizer bases B2, B3 (word for word), B4 literal expansion,
    //    the L3 relation set, and decomposition span equalities n in {3,4}
    {
        auto t0 = clk::now();
        const RepContext& rc = RepContext::get(5, 1);
        bool ok = true;
        std::string detail;

        auto b2 = enumerate_centralizer_basis(rc, 2);
        std::vector<BraidWord> b2_expect = {{}, {1}, {1, 1}};
        if (b2.words != b2_expect) {
            ok = false;
            detail = "B2 mismatch";
        }
        auto b3 = enumerate_centralizer_basis(rc, 3);
        if (b3.words != b3_reference_words()) {
            ok = false;
            if (detail.empty()) detail = "B3 mismatch";
        }
        auto b4 = enumerate_centralizer_basis(rc, 4);
        {
            std::vector<BraidWord> got = b4.words;
            std::sort(got.begin(), got.end(), deglex_less);
            if (got != b4_reference_words()) {
                ok = false;
                if (detail.empty()) detail = "B4 literal-expansion mismatch";
            }
        }
        Report l3 = verify_l3_relations(rc);
        ok = ok && l3.all_pass();
        if (detail.empty() && !l3.all_pass()) detail = first_fail(l3);
        for (int n : {3, 4}) {
            Report dec = verify_decomposition(rc, n);
            ok = ok && dec.all_pass();
            if (detail.empty() && !dec.all_pass()) detail = "n=" + std::to_string(n) + ": " + first_fail(dec);
        }
        line(9, "centralizer bases B2/B3/B4, L3 relations, decompositions n in {3,4}", ok, secs_since(t0),
             detail);
    }

    // 10. Commutant dimension equals the basis size for n in {2,3} at d=5,
    //     mu in {1,2}
    {
        auto t0 = clk::now();
        bool ok = true;
        std::string detail;
        for (long mu : {1L, 2L}) {
            const RepContext& rc = RepContext::get(5, mu);
            for (int n : {2, 3}) {
                long dim = commutant_dimension(rc, n);
                long want = (long)enumerate_centralizer_basis(rc, n).words.size();
                if (dim != want) {
                    ok = false;
                    if (detail.empty()) {
                        detail = "mu=" + std::to_string(mu) + " n=" + std::to_string(n) + ": " +
                                 std::to_string(dim) + " != " + std::to_string(want);
                        if (q_power(rc.ctx(), 4 * mu + 2).is_one())
                            detail += "; degenerate weight q^(4mu+2)=1, the braid-word algebra is a "
                                      "proper subalgebra of the commutant here";
                    }
                }
            }
        }
        line(10, "commutant dimension equals |basis| for n in {2,3}, d=5, mu in {1,2}", ok, secs_since(t0),
             detail);
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
