#include "syzlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw PreconditionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int euler_phi(int n) {
    if (n < 1) throw PreconditionError("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact quotient of a by the monic polynomial b; the remainder must vanish.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> rem = a.coeffs;
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(dq + 1), 0);
    for (int k = dq; k >= 0; --k) {
        const std::int64_t lead = rem[static_cast<std::size_t>(k + db)];
        quot[static_cast<std::size_t>(k)] = lead;
        if (lead == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= lead * b.coeffs[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < db; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) throw InternalInconsistency("cyclotomic division left a remainder");
    return IntPolynomial{std::move(quot)};
}

IntPolynomial cyclotomic_unchecked(int n) {
    IntPolynomial num{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)};
    num.coeffs.front() = -1;
    num.coeffs.back() = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(num, cyclotomic_unchecked(d));
    return num;
}

struct Context {
    int n = 1;
    int phi = 1;
    IntPolynomial poly;
    // zeta^k reduced mod Phi_n, for 0 <= k < n
    std::vector<std::vector<std::int64_t>> zeta_powers;
};

const Context& context(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Context>> memo;
    std::lock_guard lock(mutex);
    auto& slot = memo[n];
    if (!slot) {
        auto ctx = std::make_unique<Context>();
        ctx->n = n;
        ctx->poly = cyclotomic_polynomial(n);
        ctx->phi = ctx->poly.degree();
        const auto phi = static_cast<std::size_t>(ctx->phi);
        std::vector<std::int64_t> v(phi, 0);
        v[0] = 1;
        for (int k = 0; k < n; ++k) {
            ctx->zeta_powers.push_back(v);
            const std::int64_t carry = v[phi - 1];
            for (std::size_t j = phi - 1; j > 0; --j) v[j] = v[j - 1];
            v[0] = 0;
            for (std::size_t j = 0; j < phi; ++j) v[j] -= carry * ctx->poly.coeffs[j];
        }
        slot = std::move(ctx);
    }
    return *slot;
}

void check_conductor(int n) {
    if (n < 1) throw PreconditionError("conductor must be positive");
    if (n > kMaxConductor) throw LimitExceeded("conductor " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxConductor));
}

bool rational_like(int conductor) { return conductor <= 2; }

// Solves the square rational system m * x = rhs; m must be invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) ++piv;
        if (piv == n) throw InternalInconsistency("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        const Rational inv = 1 / m[c][c];
        for (std::size_t j = c; j < n; ++j) m[c][j] *= inv;
        rhs[c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(m[r][c])) continue;
            const Rational f = m[r][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    return rhs;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int n, int limit) {
    if (n < 1) throw PreconditionError("cyclotomic_polynomial requires n >= 1");
    if (n > limit) throw LimitExceeded("conductor " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    return cyclotomic_unchecked(n);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
    check_conductor(conductor);
    if (coeffs_.size() != static_cast<std::size_t>(euler_phi(conductor)))
        throw PreconditionError("cyclotomic coefficient list must have length phi(N)");
}

Cyclotomic Cyclotomic::zeta(int conductor, long power) {
    check_conductor(conductor);
    const Context& ctx = context(conductor);
    long k = power % conductor;
    if (k < 0) k += conductor;
    const auto& v = ctx.zeta_powers[static_cast<std::size_t>(k)];
    std::vector<Rational> coeffs(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) coeffs[j] = Rational(static_cast<long>(v[j]));
    return Cyclotomic(conductor, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!syzlab::is_zero(c)) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (!syzlab::is_zero(coeffs_[j])) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(int conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0) throw PreconditionError("lift target must be a multiple of the conductor");
    check_conductor(conductor);
    const Context& ctx = context(conductor);
    const int step = conductor / conductor_;
    std::vector<Rational> out(static_cast<std::size_t>(ctx.phi));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (syzlab::is_zero(coeffs_[k])) continue;
        const auto& v = ctx.zeta_powers[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(conductor)];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) out[j] += coeffs_[k] * static_cast<long>(v[j]);
    }
    return Cyclotomic(conductor, std::move(out));
}

Cyclotomic Cyclotomic::conj() const {
    if (rational_like(conductor_)) return *this;
    const Context& ctx = context(conductor_);
    std::vector<Rational> out(coeffs_.size());
    const auto n = static_cast<std::size_t>(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (syzlab::is_zero(coeffs_[k])) continue;
        const auto& v = ctx.zeta_powers[(n - k) % n];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) out[j] += coeffs_[k] * static_cast<long>(v[j]);
    }
    return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero cyclotomic");
    if (coeffs_.size() == 1) {
        Cyclotomic out = *this;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    if (is_rational()) {
        Cyclotomic out = *this;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    const std::size_t phi = coeffs_.size();
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi));
    for (std::size_t j = 0; j < phi; ++j) {
        const Cyclotomic column = cyc_mul(*this, zeta(conductor_, static_cast<long>(j)));
        for (std::size_t i = 0; i < phi; ++i) m[i][j] = column.coeffs_[i];
    }
    std::vector<Rational> rhs(phi);
    rhs[0] = 1;
    return Cyclotomic(conductor_, solve_rational(std::move(m), std::move(rhs)));
}

std::size_t Cyclotomic::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_) total += syzlab::bit_size(c);
    return total;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return syzlab::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (syzlab::is_zero(c)) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << syzlab::to_string(mag);
            continue;
        }
        if (mag != 1) os << syzlab::to_string(mag) << "*";
        os << "z" << conductor_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (conductor_ == rhs.conductor_ || rational_like(rhs.conductor_)) {
        if (rational_like(rhs.conductor_)) {
            coeffs_[0] += rhs.coeffs_[0];
        } else {
            for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
        }
        return *this;
    }
    if (rational_like(conductor_)) {
        Rational value = coeffs_[0];
        *this = rhs;
        coeffs_[0] += value;
        return *this;
    }
    const int l = std::lcm(conductor_, rhs.conductor_);
    *this = lifted(l);
    return *this += rhs.lifted(l);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (rational_like(rhs.conductor_)) {
        Cyclotomic out = lhs;
        for (auto& c : out.coeffs_) c *= rhs.coeffs_[0];
        return out;
    }
    if (rational_like(lhs.conductor_)) {
        Cyclotomic out = rhs;
        for (auto& c : out.coeffs_) c *= lhs.coeffs_[0];
        return out;
    }
    if (lhs.conductor_ == rhs.conductor_) return cyc_mul(lhs, rhs);
    const int l = std::lcm(lhs.conductor_, rhs.conductor_);
    return cyc_mul(lhs.lifted(l), rhs.lifted(l));
}

Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) throw PreconditionError("cyc_mul: mismatched conductors");
    const std::size_t phi = a.coeffs().size();
    if (phi == 1) return Cyclotomic(a.conductor(), {a.coeffs()[0] * b.coeffs()[0]});
    std::vector<Rational> conv(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (is_zero(b.coeffs()[j])) continue;
            conv[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    const Context& ctx = context(a.conductor());
    std::vector<Rational> out(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(phi));
    const auto n = static_cast<std::size_t>(ctx.n);
    for (std::size_t t = phi; t < conv.size(); ++t) {
        if (is_zero(conv[t])) continue;
        const auto& v = ctx.zeta_powers[t % n];
        for (std::size_t j = 0; j < phi; ++j)
            if (v[j] != 0) out[j] += conv[t] * static_cast<long>(v[j]);
    }
    return Cyclotomic(a.conductor(), std::move(out));
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
    if (rational_like(lhs.conductor_) || rational_like(rhs.conductor_)) {
        auto a = lhs.as_rational();
        auto b = rhs.as_rational();
        return a && b && *a == *b;
    }
    const int l = std::lcm(lhs.conductor_, rhs.conductor_);
    return lhs.lifted(l).coeffs_ == rhs.lifted(l).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace syzlab
