#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace syzlab {

/// Arbitrary-precision integers and rationals (GMP). mpq_class keeps its
/// value canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized num/den; throws PreconditionError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::size_t bit_size(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);

}  // namespace syzlab
