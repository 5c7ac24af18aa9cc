#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "syzlab/cyclotomic.hpp"
#include "syzlab/matrix.hpp"

namespace syzlab {

/// Exponent vector of a monomial in the variables x_0..x_{n-1}.
using Exponent = std::vector<std::uint8_t>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

inline constexpr std::size_t kDefaultMonomialLimit = 20000;

int total_degree(const Exponent& e);

/// All monomials of the given degree in graded-lex order: lexicographically
/// decreasing exponent vectors, x_0^d first.
std::vector<Exponent> monomials_of_degree(std::size_t variables, int degree);

/// C(variables + degree - 1, degree), saturating at SIZE_MAX.
std::size_t monomial_count(std::size_t variables, int degree);

struct Term {
    Exponent exponent;
    Cyclotomic coeff;
};

/// Terms with nonzero coefficients in graded-lex order.
using SparsePolynomial = std::vector<Term>;

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b);

/// The image of x_column under a matrix acting on the variables:
/// sum_i m(i, column) x_i.
SparsePolynomial linear_form(const Matrix<Cyclotomic>& m, std::size_t column);

/// prod_j forms[j]^exponent[j]
SparsePolynomial substitute(const std::vector<SparsePolynomial>& forms, const Exponent& exponent);

}  // namespace syzlab
