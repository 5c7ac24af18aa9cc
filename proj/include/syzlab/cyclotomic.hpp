#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "syzlab/rational.hpp"

namespace syzlab {

/// Largest conductor accepted by default.
inline constexpr int kMaxConductor = 64;

/// Dense integer polynomial, coefficients from the constant term upward.
struct IntPolynomial {
    std::vector<std::int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

int euler_phi(int n);

/// Phi_n, obtained by exact division of x^n - 1 by Phi_d for every proper
/// divisor d of n. Throws LimitExceeded when n > limit.
IntPolynomial cyclotomic_polynomial(int n, int limit = kMaxConductor);

/// An element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1)
/// of Q[x]/Phi_N(x), always fully reduced.
///
/// Binary operators lift both operands to the lcm of their conductors. An
/// operand whose conductor has phi = 1 (N = 1 or 2) is a rational and
/// combines with any conductor without lifting.
class Cyclotomic {
   public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}
    Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}
    Cyclotomic(Rational value) : conductor_(1), coeffs_{std::move(value)} {}

    /// Coefficients must have length phi(conductor).
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    /// zeta_N^k for any integer k.
    static Cyclotomic zeta(int conductor, long power = 1);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// Same value expressed with a conductor that is a multiple of the current one.
    Cyclotomic lifted(int conductor) const;

    /// Galois conjugate zeta -> zeta^-1 (complex conjugation).
    Cyclotomic conj() const;
    /// Throws PreconditionError on zero.
    Cyclotomic inverse() const;

    std::size_t bit_size() const;
    std::string to_string() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
    friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) { return lhs * rhs.inverse(); }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

   private:
    int conductor_;
    std::vector<Rational> coeffs_;
};

/// Strict product: both operands must already share a conductor.
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);

/// The rational value iff every coefficient beyond index 0 vanishes.
inline std::optional<Rational> cyc_as_rational(const Cyclotomic& a) { return a.as_rational(); }

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline std::size_t bit_size(const Cyclotomic& x) { return x.bit_size(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace syzlab
