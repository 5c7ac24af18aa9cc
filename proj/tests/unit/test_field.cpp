#include <doctest.h>

#include <random>

#include "syzlab/cyclotomic.hpp"
#include "syzlab/error.hpp"

using namespace syzlab;

namespace {

Cyclotomic random_element(std::mt19937& rng, int conductor) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return Cyclotomic(conductor, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).coeffs == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4).coeffs == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coeffs == std::vector<std::int64_t>{1, -1, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(65), LimitExceeded);

    for (int n = 1; n <= 64; ++n) {
        const IntPolynomial phi = cyclotomic_polynomial(n);
        CHECK(phi.degree() == euler_phi(n));
        // x^n - 1 divided by phi leaves no remainder
        std::vector<std::int64_t> rem(static_cast<std::size_t>(n) + 1, 0);
        rem[0] = -1;
        rem[static_cast<std::size_t>(n)] = 1;
        for (int top = n; top >= phi.degree(); --top) {
            const std::int64_t lead = rem[static_cast<std::size_t>(top)];
            if (lead == 0) continue;
            for (int i = 0; i <= phi.degree(); ++i)
                rem[static_cast<std::size_t>(top - phi.degree() + i)] -= lead * phi.coeffs[static_cast<std::size_t>(i)];
        }
        for (auto c : rem) CHECK(c == 0);
    }
}

TEST_CASE("cyclotomic products") {
    const Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(cyc_mul(i, i) == Cyclotomic(-1L));
    const Cyclotomic w = Cyclotomic::zeta(3);
    CHECK(cyc_mul(w, w) == Cyclotomic(-1L) - w);
    CHECK(cyc_mul(w, w).to_string() == "-1 - z3");
    CHECK(cyc_mul(w, Cyclotomic::zeta(3, 0)) == w);
    CHECK_THROWS_AS(cyc_mul(i, w), PreconditionError);
}

TEST_CASE("cyclotomic rational detection") {
    const Cyclotomic i = Cyclotomic::zeta(4);
    REQUIRE(cyc_as_rational(i * i + Cyclotomic(1L)));
    CHECK(*cyc_as_rational(i * i + Cyclotomic(1L)) == 0);
    CHECK(!cyc_as_rational(Cyclotomic::zeta(3)));
    const auto sum = Cyclotomic::zeta(6) + Cyclotomic::zeta(6, -1);
    REQUIRE(cyc_as_rational(sum));
    CHECK(*cyc_as_rational(sum) == 1);
}

TEST_CASE("mixed conductors lift to the lcm") {
    const Cyclotomic s = Cyclotomic::zeta(4) * Cyclotomic::zeta(3);
    CHECK(s.conductor() == 12);
    CHECK(s == Cyclotomic::zeta(12, 7));
    CHECK(Cyclotomic::zeta(6, 2) == Cyclotomic::zeta(3, 1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("roots of unity have norm one") {
    for (int n = 1; n <= 24; ++n) {
        for (int k = 0; k < n; ++k) {
            const auto z = Cyclotomic::zeta(n, k);
            const auto r = cyc_as_rational(z * z.conj());
            REQUIRE(r);
            CHECK(*r == 1);
        }
    }
}
