#include "doctest.h"

#include "superq/json_io.hpp"

using namespace superq;

namespace {
struct Rng {
    unsigned long state;
    explicit Rng(unsigned long seed) : state(seed) {}
    unsigned long next() { state = state * 6364136223846793005ULL + 1442695040888963407ULL; return state >> 33; }
    int below(int n) { return (int)(next() % (unsigned long)n); }
};
} // namespace

TEST_CASE("scalar round trip and canonical form") {
    const auto& ctx = FieldContext::get(5);
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rat> coeffs(ctx.degree());
        for (auto& c : coeffs) c = Rat(rng.below(19) - 9, 1 + rng.below(7));
        Scalar s(ctx, coeffs);
        json j = scalar_to_json(s);
        Scalar back = scalar_from_json(j);
        CHECK(back == s);
        // serializing again is byte-identical (canonical-form determinism)
        CHECK(scalar_to_json(back).dump() == j.dump());
    }
    CHECK(scalar_to_json(Scalar(ctx, Rat(1, 2))).at("coeffs")[0].get<std::string>() == "1/2");
}

TEST_CASE("element round trip across algebras") {
    Rng rng(23);
    for (auto kind : {AlgKind::UBar, AlgKind::BPlus, AlgKind::BMinus, AlgKind::DualX}) {
        const auto& s = AlgebraSpec::get(kind, 3);
        AlgebraElement x(s);
        for (int t = 0; t < 6; ++t) {
            Expos e{};
            for (int p = 0; p < s.ngens; ++p) e[p] = rng.below(s.cap[p]);
            x.add_term(e, q_power(*s.ctx, rng.below(3)) + Scalar::of_int(*s.ctx, rng.below(5)));
        }
        json j = element_to_json(x);
        CHECK(element_from_json(j) == x);
        CHECK(element_to_json(element_from_json(j)).dump() == j.dump());
        CHECK((int)j.at("terms")[0].at("m").size() == s.ngens);
    }
}

TEST_CASE("tensor and matrix round trip") {
    const auto& s = AlgebraSpec::get(AlgKind::UBar, 3);
    const auto& H = HopfOps::get(s);
    auto t = H.coproduct(AlgebraElement::generator(s, GE3));
    json j = tensor_to_json(t);
    CHECK(tensor_from_json(j) == t);

    const auto& rc = RepContext::get(5, 1);
    json jm = matrix_to_json(rc.c_matrix());
    CHECK(matrix_from_json(jm) == rc.c_matrix());
    CHECK(matrix_to_csv(rc.c_matrix()).substr(0, 14) == "row,col,value\n");
}

TEST_CASE("rmatrix export metadata") {
    auto R = r_multiplicative(3);
    json j = rmatrix_to_json(R, "mult");
    CHECK(j.at("form") == "mult");
    CHECK(j.at("terms").get<size_t>() == R.term_count());
    CHECK(tensor_from_json(j.at("tensor")) == R.value());
}

TEST_CASE("report json carries the first counterexample") {
    Report r;
    r.suite = "demo";
    r.param("d", "3");
    CheckResult bad;
    bad.check = "x";
    bad.input = "y";
    bad.pass = false;
    bad.lhs = "1";
    bad.rhs = "0";
    r.add(bad);
    json j = report_to_json(r);
    CHECK(j.at("pass") == false);
    CHECK(j.at("first_failure").at("check") == "x");
    CHECK(j.at("params").at("version") == kArtifactVersion);
}

TEST_CASE("invalid json is rejected") {
    CHECK_THROWS(scalar_from_json(json{{"d", 3}, {"coeffs", {"1"}}}));
    CHECK_THROWS(element_from_json(json{{"algebra", "nope"}, {"d", 3}, {"terms", json::array()}}));
    const auto& s = AlgebraSpec::get(AlgKind::BPlus, 3);
    json bad{{"algebra", "bplus"}, {"d", 3},
             {"terms", json::array({json{{"m", {9, 0, 0, 0, 0}}, {"c", scalar_to_json(Scalar::one(*s.ctx))}}})}};
    CHECK_THROWS(element_from_json(bad));
}
