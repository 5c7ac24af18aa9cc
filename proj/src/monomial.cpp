#include "syzlab/monomial.hpp"

#include <functional>
#include <limits>
#include <map>

#include "syzlab/error.hpp"

namespace syzlab {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

namespace {

void enumerate(std::size_t var, int remaining, Exponent& current, std::vector<Exponent>& out) {
    if (var + 1 == current.size()) {
        current[var] = static_cast<std::uint8_t>(remaining);
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[var] = static_cast<std::uint8_t>(e);
        enumerate(var + 1, remaining - e, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t variables, int degree) {
    if (degree < 0) throw PreconditionError("negative degree");
    if (degree > std::numeric_limits<std::uint8_t>::max()) throw LimitExceeded("degree too large");
    std::vector<Exponent> out;
    if (variables == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent current(variables, 0);
    enumerate(0, degree, current, out);
    return out;
}

std::size_t monomial_count(std::size_t variables, int degree) {
    if (variables == 0) return degree == 0 ? 1 : 0;
    // C(n + d - 1, d) computed incrementally; each prefix is an integer
    unsigned __int128 c = 1;
    const auto n = static_cast<unsigned __int128>(variables);
    for (int i = 1; i <= degree; ++i) {
        c = c * (n + static_cast<unsigned>(i) - 1) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(c);
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    std::map<Exponent, Cyclotomic, std::greater<>> acc;
    for (const auto& ta : a) {
        for (const auto& tb : b) {
            Exponent e = ta.exponent;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(e[i] + tb.exponent[i]);
            auto [it, inserted] = acc.try_emplace(std::move(e), ta.coeff * tb.coeff);
            if (!inserted) it->second += ta.coeff * tb.coeff;
        }
    }
    SparsePolynomial out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
    return out;
}

SparsePolynomial linear_form(const Matrix<Cyclotomic>& m, std::size_t column) {
    SparsePolynomial out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, column).is_zero()) continue;
        Exponent e(m.rows(), 0);
        e[i] = 1;
        out.push_back(Term{std::move(e), m(i, column)});
    }
    return out;
}

SparsePolynomial substitute(const std::vector<SparsePolynomial>& forms, const Exponent& exponent) {
    SparsePolynomial result{Term{Exponent(forms.empty() ? exponent.size() : forms.size(), 0), Cyclotomic(1)}};
    for (std::size_t j = 0; j < exponent.size(); ++j)
        for (int t = 0; t < exponent[j]; ++t) result = multiply(result, forms[j]);
    return result;
}

}  // namespace syzlab
