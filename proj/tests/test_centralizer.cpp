#include "doctest.h"

#include "superq/centralizer.hpp"

using namespace superq;

TEST_CASE("deglex order") {
    CHECK(deglex_less({}, {1}));
    CHECK(deglex_less({2}, {1, 1}));
    CHECK(deglex_less({1, 2}, {2, 1}));
    CHECK(!deglex_less({2, 1}, {1, 2}));
    CHECK(deglex_less({1, 1, 2, 2}, {1, 2, 1, 1}));
}

TEST_CASE("braid generators at n=2,3,4") {
    const auto& rc = RepContext::get(5, 1);
    CHECK(braid_generator(rc, 2, 1) == rc.c_matrix());
    auto rep3 = verify_braid_relations(rc, 3);
    for (const auto& r : rep3.results) {
        INFO(r.check, " ", r.input);
        CHECK(r.pass);
    }
    auto rep4 = verify_braid_relations(rc, 4);
    for (const auto& r : rep4.results) {
        INFO(r.check, " ", r.input);
        CHECK(r.pass);
    }
}

TEST_CASE("minimal relations") {
    for (auto [d, mu] : std::vector<std::pair<int, long>>{{5, 1}, {5, 2}, {3, 1}}) {
        auto rep = verify_minimal_relations(RepContext::get(d, mu));
        for (const auto& r : rep.results) {
            INFO("d=", d, " mu=", mu, " ", r.check, " lhs=", r.lhs, " rhs=", r.rhs);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("two-strand basis is {1, g1, g1^2}") {
    const auto& rc = RepContext::get(5, 1);
    auto basis = enumerate_centralizer_basis(rc, 2);
    REQUIRE(basis.words.size() == 3);
    CHECK(basis.words[0] == BraidWord{});
    CHECK(basis.words[1] == BraidWord{1});
    CHECK(basis.words[2] == BraidWord{1, 1});
}

TEST_CASE("three-strand basis reproduces the twenty listed words in order") {
    const auto& rc = RepContext::get(5, 1);
    auto basis = enumerate_centralizer_basis(rc, 3);
    auto expect = b3_reference_words();
    REQUIRE(basis.words.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
        INFO("i=", i, " got=", word_to_string(basis.words[i]), " want=", word_to_string(expect[i]));
        CHECK(basis.words[i] == expect[i]);
    }
}

TEST_CASE("l3 relations at d=5 mu=1 and d=7 mu=2") {
    for (auto [d, mu] : std::vector<std::pair<int, long>>{{5, 1}, {7, 2}}) {
        auto rep = verify_l3_relations(RepContext::get(d, mu));
        for (const auto& r : rep.results) {
            INFO("d=", d, " mu=", mu, " ", r.check);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("decomposition span equality at n=3") {
    auto rep = verify_decomposition(RepContext::get(5, 1), 3);
    for (const auto& r : rep.results) {
        INFO(r.check, " ", r.input, " lhs=", r.lhs, " rhs=", r.rhs);
        CHECK(r.pass);
    }
}

TEST_CASE("commutant dimensions match the enumerated bases") {
    const auto& rc = RepContext::get(5, 1);
    CHECK(commutant_dimension(rc, 1) == 1);
    CHECK(commutant_dimension(rc, 2) == 3);
    CHECK(commutant_dimension(rc, 3) == 20);
}

TEST_CASE("B4 literal expansion is well defined and deglex sorted") {
    auto words = b4_reference_words();
    CHECK(words.size() == 175);
    for (size_t i = 0; i + 1 < words.size(); ++i) CHECK(deglex_less(words[i], words[i + 1]));
}

TEST_CASE("cap violations are rejected") {
    const auto& rc = RepContext::get(5, 1);
    CHECK_THROWS_AS(enumerate_centralizer_basis(rc, 5), CapExceeded);
    CHECK_THROWS_AS(verify_decomposition(rc, 2), CapExceeded);
    CHECK_THROWS_AS(braid_generator(rc, 3, 3), IndexError);
    CHECK_THROWS_AS(commutant_dimension(rc, 9), CapExceeded);
}

TEST_CASE("degenerate weight: word algebra vs commutant at d=5 mu=2") {
    // q^(4 mu + 2) = 1 here, the braiding operator picks up a Jordan block,
    // and the braid-word algebra becomes a proper subalgebra of the
    // commutant: 15 against 20 on three strands. Generic weights match.
    const auto& rc = RepContext::get(5, 2);
    CHECK(enumerate_centralizer_basis(rc, 3).words.size() == 15);
    CHECK(commutant_dimension(rc, 3) == 20);
    CHECK(enumerate_centralizer_basis(rc, 2).words.size() == 3);
    CHECK(commutant_dimension(rc, 2) == 3);
    const auto& rc3 = RepContext::get(5, 3);
    CHECK(enumerate_centralizer_basis(rc3, 3).words.size() == 20);
    CHECK(commutant_dimension(rc3, 3) == 20);
}
