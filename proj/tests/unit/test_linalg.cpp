#include <doctest.h>

#include <random>

#include "syzlab/linalg.hpp"
#include "syzlab/rational.hpp"

using namespace syzlab;
using Q = Matrix<Rational>;

TEST_CASE("rref examples") {
    auto r = rref(Q{{1, 2}, {2, 4}});
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});

    const Q id = Q::identity(3);
    auto ri = rref(id);
    CHECK(ri.reduced == id);
    CHECK(ri.rank == 3);

    auto rs = rref(Q{{0, 1}, {1, 0}});
    CHECK(rs.reduced == Q::identity(2));
    CHECK(rs.rank == 2);
}

TEST_CASE("kernel examples") {
    const Q m{{1, 2}, {2, 4}};
    const Q k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -2 * k(1, 0));
    CHECK((m * k).is_zero());
    CHECK(kernel_basis(Q::identity(3)).cols() == 0);
    CHECK(kernel_basis(Q(2, 3)).cols() == 3);
}

TEST_CASE("image and quotient dimensions") {
    CHECK(image_dim(Q{{1, 2}, {2, 4}}) == 1);
    CHECK(image_dim(Q(3, 2)) == 0);

    const Q id = Q::identity(3);
    CHECK(quotient_dim(id, Q{{1}, {0}, {0}}) == 2);
    CHECK(quotient_dim(id, id) == 0);
    const Q amb{{1, 0}, {0, 1}, {0, 0}};
    CHECK(quotient_dim(amb, Q{{1}, {1}, {0}}) == 1);
    CHECK_THROWS_WITH_AS(quotient_dim(amb, Q{{0}, {0}, {1}}), "sub not contained in ambient", PreconditionError);
}

TEST_CASE("random matrix properties") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(1, 8), entry(-3, 3), coin(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
        Q m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (coin(rng)) m(i, j) = Rational(entry(rng)) / (1 + coin(rng));
        const auto r = rref(m);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(r.rank == rank(m));
        CHECK(rref(r.reduced).reduced == r.reduced);
        const Q k = kernel_basis(m);
        CHECK(k.cols() + r.rank == cols);
        CHECK((m * k).is_zero());
        if (auto x = solve(m, m * Q::identity(cols))) CHECK(m * *x == m);
    }
}

TEST_CASE("incremental echelon") {
    IncrementalEchelon<Rational> e(3);
    CHECK(e.add({1, 1, 0}));
    CHECK(e.add({0, 1, 1}));
    CHECK(!e.add({1, 2, 1}));
    CHECK(e.contains({2, 1, -1}));
    CHECK(e.rank() == 2);
}
