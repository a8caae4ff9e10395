#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "superq/json_io.hpp"

using namespace superq;

namespace {

struct Rng {
    unsigned long state;
    explicit Rng(unsigned long seed) : state(seed * 2 + 1) {}
    unsigned long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    size_t below(size_t n) { return (size_t)(next() % (unsigned long)n); }
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << j.dump(2) << "\n";
    }
}

int finish(const std::vector<Report>& reports, unsigned long seed, const std::string& out_path) {
    bool pass = true;
    json jr = json::array();
    for (const auto& r : reports) {
        pass = pass && r.all_pass();
        jr.push_back(report_to_json(r));
    }
    json out{{"version", kArtifactVersion}, {"seed", seed}, {"pass", pass}, {"reports", jr}};
    emit(out, out_path);
    return pass ? 0 : 1;
}

int require_odd_d(int d) {
    if (d < 3 || d % 2 == 0) {
        std::cerr << "error: d must be odd and >= 3\n";
        return 2;
    }
    return 0;
}

Report hopf_suite(AlgKind kind, int d, unsigned long seed) {
    const AlgebraSpec& s = AlgebraSpec::get(kind, d);
    auto basis = enumerate_basis(s);
    std::vector<AlgebraElement> samples;
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    Rng rng(seed);
    if (kind == AlgKind::UBar && d > 3) {
        for (int t = 0; t < 500; ++t)
            samples.push_back(AlgebraElement::monomial(s, basis[rng.below(basis.size())]));
    } else {
        for (const auto& e : basis) samples.push_back(AlgebraElement::monomial(s, e));
    }
    for (int p = 0; p < s.ngens; ++p)
        for (int t = 0; t < 24; ++t)
            pairs.emplace_back(AlgebraElement::generator(s, s.gen[p]),
                               AlgebraElement::monomial(s, basis[rng.below(basis.size())]));
    for (int t = 0; t < 100; ++t)
        pairs.emplace_back(AlgebraElement::monomial(s, basis[rng.below(basis.size())]),
                           AlgebraElement::monomial(s, basis[rng.below(basis.size())]));
    Report rep = check_hopf_axioms(s, samples, pairs);
    Report extra = check_antipode_identities(s, samples);
    for (auto& c : extra.results) rep.add(std::move(c));
    rep.param("seed", std::to_string(seed));
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for a quantum superalgebra at odd roots of unity"};
    app.require_subcommand(1);

    int d = 3;
    long mu = 1;
    int n = 2;
    unsigned long seed = 0;
    std::string out_path;
    std::string form = "mult";
    bool enable_ybe = false;
    bool enable_n5 = false;
    bool csv = false;

    auto add_common = [&](CLI::App* cmd, bool with_mu = false, bool with_n = false) {
        cmd->add_option("--d", d, "odd order of the root of unity, >= 3")->required();
        cmd->add_option("--seed", seed, "seed for sampled checks (default 0)");
        cmd->add_option("--out", out_path, "write the JSON result to a file instead of stdout");
        if (with_mu) cmd->add_option("--mu", mu, "weight parameter, [mu][1+mu] != 0")->required();
        if (with_n) cmd->add_option("--n", n, "number of tensor factors");
    };

    auto* hopf = app.add_subcommand("hopf", "Hopf superalgebra axiom checks");
    auto* hopf_verify = hopf->add_subcommand("verify", "run the axiom suite on all four algebras");
    add_common(hopf_verify);

    auto* dual = app.add_subcommand("dual", "dual Hopf superalgebra checks");
    auto* dual_verify = dual->add_subcommand("verify", "PBW product vs functional convolution");
    add_common(dual_verify);

    auto* dbl = app.add_subcommand("double", "quantum double checks");
    auto* dbl_verify = dbl->add_subcommand("verify", "cross relations, chi morphism, embedding");
    add_common(dbl_verify);

    auto* rmx = app.add_subcommand("rmatrix", "universal R-matrix export and verification");
    rmx->add_option("--d", d, "odd order of the root of unity")->required();
    rmx->add_option("--form", form, "mult|coeff construction")->check(CLI::IsMember({"mult", "coeff"}));
    rmx->add_option("--out", out_path, "output file");
    auto* rmx_verify = rmx->add_subcommand("verify", "form equality and quasitriangularity");
    rmx_verify->add_option("--seed", seed, "seed (recorded in the report)");
    rmx_verify->add_flag("--enable-abstract-ybe", enable_ybe,
                         "run the abstract Yang-Baxter expansion even for d > 3 (very expensive)");

    auto* rep_cmd = app.add_subcommand("rep", "typical representation checks and exports");
    auto* rep_check = rep_cmd->add_subcommand("check", "defining relations, braiding table, intertwiner");
    add_common(rep_check, true);
    auto* rep_cmx = rep_cmd->add_subcommand("c-matrix", "export the 16x16 braiding operator");
    add_common(rep_cmx, true);
    rep_cmx->add_flag("--csv", csv, "emit CSV instead of JSON");

    auto* braid = app.add_subcommand("braid", "braid-relation checks on tensor powers");
    auto* braid_verify = braid->add_subcommand("verify", "braid, far-commutation, cubic, Yang-Baxter");
    add_common(braid_verify, true, true);

    auto* cent = app.add_subcommand("centralizer", "centralizer algebra computations");
    auto* cent_basis = cent->add_subcommand("basis", "greedy deglex basis enumeration");
    add_common(cent_basis, true, true);
    cent_basis->add_flag("--enable-n5", enable_n5, "allow n = 5 (slow)");
    auto* cent_rel = cent->add_subcommand("relations", "three-strand generating relations");
    add_common(cent_rel, true);
    auto* cent_dec = cent->add_subcommand("decomposition", "inductive span decomposition");
    add_common(cent_dec, true, true);
    cent_dec->add_flag("--enable-n5", enable_n5, "allow n = 5 (slow)");
    auto* cent_com = cent->add_subcommand("commutant", "commutant dimension cross-check");
    add_common(cent_com, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (int rc = require_odd_d(d)) return rc;

        if (hopf_verify->parsed()) {
            std::vector<Report> reports;
            for (auto kind : {AlgKind::UBar, AlgKind::BPlus, AlgKind::BMinus, AlgKind::DualX})
                reports.push_back(hopf_suite(kind, d, seed));
            return finish(reports, seed, out_path);
        }
        if (dual_verify->parsed()) {
            return finish({DualSide::get(d).consistency_check()}, seed, out_path);
        }
        if (dbl_verify->parsed()) {
            return finish({double_relations_check(d)}, seed, out_path);
        }
        if (rmx->parsed()) {
            if (rmx_verify->parsed()) {
                bool full = (d == 3) || enable_ybe;
                std::vector<Report> reports = {verify_rmatrix_forms(d),
                                               verify_quasitriangular(d, full, full)};
                return finish(reports, seed, out_path);
            }
            RMatrix R = (form == "mult") ? r_multiplicative(d) : r_coefficient(d);
            emit(rmatrix_to_json(R, form), out_path);
            return 0;
        }
        if (rep_check->parsed() || rep_cmx->parsed() || braid_verify->parsed() || cent->parsed()) {
            if (!RepContext::mu_valid(d, mu)) {
                std::cerr << "error: [mu][1+mu] = 0 in F for mu=" << mu << ", d=" << d << "\n";
                return 2;
            }
            const RepContext& rc = RepContext::get(d, mu);
            if (rep_check->parsed()) {
                return finish({check_rep(rc, seed), verify_minimal_relations(rc)}, seed, out_path);
            }
            if (rep_cmx->parsed()) {
                if (csv) {
                    if (out_path.empty()) {
                        std::cout << matrix_to_csv(rc.c_matrix());
                    } else {
                        std::ofstream f(out_path);
                        f << matrix_to_csv(rc.c_matrix());
                    }
                } else {
                    emit(matrix_to_json(rc.c_matrix()), out_path);
                }
                return 0;
            }
            if (braid_verify->parsed()) {
                return finish({verify_braid_relations(rc, n), verify_minimal_relations(rc)}, seed, out_path);
            }
            int cap = enable_n5 ? 5 : 4;
            if (cent_basis->parsed()) {
                auto basis = enumerate_centralizer_basis(rc, n, cap);
                emit(basis_to_json(basis, d, mu), out_path);
                return 0;
            }
            if (cent_rel->parsed()) {
                return finish({verify_l3_relations(rc), verify_minimal_relations(rc)}, seed, out_path);
            }
            if (cent_dec->parsed()) {
                return finish({verify_decomposition(rc, n, cap)}, seed, out_path);
            }
            if (cent_com->parsed()) {
                long dim = commutant_dimension(rc, n);
                auto basis = enumerate_centralizer_basis(rc, n);
                Report rep;
                rep.suite = "commutant";
                rep.param("d", std::to_string(d));
                rep.param("mu", std::to_string(mu));
                rep.param("n", std::to_string(n));
                CheckResult c;
                c.check = "commutant_dim_equals_basis_size";
                c.pass = (dim == (long)basis.words.size());
                c.lhs = std::to_string(dim);
                c.rhs = std::to_string(basis.words.size());
                if (c.pass) {
                    c.lhs.clear();
                    c.rhs.clear();
                }
                rep.add(std::move(c));
                return finish({rep}, seed, out_path);
            }
        }
        std::cerr << "error: missing subcommand\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidMu& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
