#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "syzlab/error.hpp"
#include "syzlab/schur.hpp"

using namespace syzlab;
using namespace testing_support;

TEST_CASE("partitions") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(partitions_of(0).size() == 1);
    CHECK(Partition({2, 1, 0}).rows() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka_number(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka_number(Partition({2, 2}), {1, 1, 1, 1}) == 2);
    CHECK(kostka_number(Partition({3, 2}), {2, 2, 1}) == 2);
    CHECK(kostka_number(Partition({2, 1}), {0, 3}) == 0);
    CHECK(kostka_number(Partition({2}), {0, 2, 0}) == 1);
    CHECK(kostka_number(Partition(), {0, 0}) == 1);
    CHECK_THROWS_AS(kostka_number(Partition({2}), {1}), PreconditionError);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                auto content = mu.parts;
                CHECK(kostka_number(lambda, content) == oracle::count_ssyt(lambda.parts, content));
                // permuting the content leaves K unchanged
                std::reverse(content.begin(), content.end());
                CHECK(kostka_number(lambda, content) == oracle::count_ssyt(lambda.parts, mu.parts));
            }
}

TEST_CASE("Kostka matrix is unitriangular in dominance order") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                const long k = kostka_number(lambda, mu.parts);
                if (lambda == mu) CHECK(k == 1);
                else if (!dominates(lambda, mu)) CHECK(k == 0);
            }
    }
}

TEST_CASE("Littlewood-Richardson coefficients") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
    CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({1, 1})) == 0);
    CHECK(lr_coefficient(Partition({1}), Partition({2}), Partition()) == 0);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(n - a)) {
                        const long c = lr_coefficient(lambda, mu, nu);
                        CHECK(c == lr_coefficient(lambda, nu, mu));
                        if (n <= 5) CHECK(c == oracle::lr_by_kostka(lambda.parts, mu.parts, nu.parts));
                    }
}

TEST_CASE("hook-content dimensions") {
    CHECK(schur_dim(Partition({2}), 3) == 6);
    CHECK(schur_dim(Partition({1, 1}), 3) == 3);
    CHECK(schur_dim(Partition({2, 1}), 3) == 8);
    CHECK(schur_dim(Partition({1, 1, 1}), 2) == 0);
    CHECK(schur_dim(Partition(), 0) == 1);
    // sum over lambda |- n of dim S_lambda(C^k) * f^lambda = k^n
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 5; ++n) {
            Integer total = 0;
            for (const auto& lambda : partitions_of(n)) {
                std::vector<int> ones(static_cast<std::size_t>(n), 1);
                total += schur_dim(lambda, k) * kostka_number(lambda, ones);
            }
            Integer expect = 1;
            for (int i = 0; i < n; ++i) expect *= k;
            CHECK(total == expect);
        }
}

TEST_CASE("Cauchy identity") {
    auto z2 = builtin_group("builtin:cyclic:2");
    auto c = cauchy_check(z2.catalog, 0, 3, 2);
    CHECK(c.pass);
    CHECK(c.lhs == 6);
    auto s3 = builtin_group("builtin:sym:3");
    std::size_t two = 0;
    for (std::size_t i = 0; i < s3.catalog.size(); ++i)
        if (s3.catalog.irreps[i].degree() == 2) two = i;
    auto c2 = cauchy_check(s3.catalog, two, 2, 2);
    CHECK(c2.lhs == 10);
    CHECK(c2.rhs == 10);
    CHECK(c2.weights_match);
    for (int k = 0; k <= 4; ++k)
        for (int d = 0; d <= 5; ++d) CHECK(cauchy_check(s3.catalog, two, k, d).pass);
}

TEST_CASE("Schur multiplicities from weights") {
    // Sym^2(C^2) (x) C^2 has weights of S_(2) (x) S_(1)
    WeightMap w;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b) w[{a, 2 - a, b, 1 - b}] = 1;
    auto dec = schur_multiplicities(w, {2, 2});
    REQUIRE(dec.multiplicities.size() == 1);
    CHECK(dec.multiplicities.begin()->first == std::vector<Partition>{Partition({2}), Partition({1})});
    CHECK(dec.dimension() == 6);
    CHECK(dec.max_rows() == std::vector<int>{1, 1});

    WeightMap lopsided{{{1, 0}, 1}};
    CHECK_THROWS_AS(schur_multiplicities(lopsided, {2}), InternalInconsistency);
    WeightMap bad{{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 0}};
    CHECK_THROWS_AS(schur_multiplicities(bad, {2}), InternalInconsistency);
}

TEST_CASE("ring weights decompose and obey row bounds") {
    auto z2 = builtin_group("builtin:cyclic:2");
    InvariantRing ring(isotypic_representation(z2.catalog, {2, 2}));
    auto dec = schur_multiplicities(ring_weights(ring, 2), {2, 2});
    CHECK(dec.multiplicities.size() == 2);
    CHECK(dec.dimension() == ring.dimension(2));
    CHECK(row_bound_check(dec, {1, 1}).pass);
    auto fail = row_bound_check(dec, {0, 0});
    CHECK_FALSE(fail.pass);
    CHECK(fail.witnesses.size() == 2);
    CHECK_THROWS_WITH_AS(row_bound_check(dec, {2, 2}), doctest::Contains("factor dimension too small"),
                         PreconditionError);

    InvariantRing wide(isotypic_representation(z2.catalog, {3, 3}));
    for (int d = 0; d <= 6; ++d) {
        auto full = schur_multiplicities(ring_weights(wide, d), {3, 3});
        CHECK(full.dimension() == wide.dimension(d));
        CHECK(row_bound_check(full, {1, 1}).pass);
    }

    auto z3 = builtin_group("builtin:cyclic:3");
    auto rep = isotypic_representation(z3.catalog, {4, 4, 4});
    CHECK(rep.degree() == 12);
    InvariantRing r3(rep);
    for (int d = 0; d <= 3; ++d) {
        auto dec3 = schur_multiplicities(ring_weights(r3, d), {4, 4, 4});
        CHECK(row_bound_check(dec3, {1, 1, 1}).pass);
    }
}

TEST_CASE("wedge weights") {
    auto z2 = builtin_group("builtin:cyclic:2");
    InvariantRing ring(isotypic_representation(z2.catalog, {0, 2}));
    auto E = build_E(ring, GeneratorMode::Minimal, NoetherResult{2, true});
    REQUIRE(E.size() == 3);
    auto w1 = wedge_weights(E, 1, 2);
    CHECK(weight_map_dimension(w1, {0, 2}, false) == 3);
    auto dec = schur_multiplicities(w1, {0, 2});
    CHECK(dec.multiplicities.size() == 1);
    auto w2 = wedge_weights(E, 2, 4);
    // Lambda^2 S^2(C^2) = S_(3,1)
    auto dec2 = schur_multiplicities(w2, {0, 2});
    REQUIRE(dec2.multiplicities.size() == 1);
    CHECK(dec2.multiplicities.begin()->first[1] == Partition({3, 1}));
}
