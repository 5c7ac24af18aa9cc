#include "syzlab/group.hpp"

#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "syzlab/error.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {

namespace {

std::string permutation_key(const Permutation& p) {
    std::string key;
    key.reserve(p.size() * 2);
    for (int x : p) {
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
    }
    return key;
}

std::string matrix_key(const Matrix<Cyclotomic>& m) {
    std::string key;
    for (const auto& x : m.entries()) {
        key += x.to_string();
        key.push_back(';');
    }
    return key;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

int common_conductor(const std::vector<Matrix<Cyclotomic>>& ms) {
    int l = 1;
    for (const auto& m : ms)
        for (const auto& x : m.entries())
            if (!x.is_rational()) l = std::lcm(l, x.conductor());
    return l;
}

Matrix<Cyclotomic> lift_matrix(const Matrix<Cyclotomic>& m, int conductor) {
    std::vector<Cyclotomic> entries;
    entries.reserve(m.entries().size());
    for (const auto& x : m.entries()) entries.push_back(x.is_rational() ? Cyclotomic(*x.as_rational()) : x.lifted(conductor));
    return Matrix<Cyclotomic>(m.rows(), m.cols(), std::move(entries));
}

}  // namespace

Matrix<Cyclotomic> permutation_matrix(const Permutation& perm) {
    Matrix<Cyclotomic> m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(static_cast<std::size_t>(perm[j]), j) = Cyclotomic(1);
    return m;
}

template <class Element, class Key, class Mul>
FiniteGroup FiniteGroup::closure(const std::vector<Element>& generators, Element identity, Key key, Mul mul,
                                 std::size_t order_limit) {
    FiniteGroup g;
    const std::size_t ng = generators.size();
    std::vector<Element> elements{identity};
    std::unordered_map<std::string, int> index{{key(identity), 0}};
    g.words_.push_back({});
    std::vector<int> right;  // right[x * ng + s] = x * generator s
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t s = 0; s < ng; ++s) {
            Element y = mul(elements[i], generators[s]);
            std::string k = key(y);
            auto it = index.find(k);
            int idx;
            if (it == index.end()) {
                if (elements.size() >= order_limit)
                    throw LimitExceeded("order limit exceeded (limit " + std::to_string(order_limit) + ")");
                idx = static_cast<int>(elements.size());
                index.emplace(std::move(k), idx);
                elements.push_back(std::move(y));
                auto w = g.words_[i];
                w.push_back(static_cast<int>(s));
                g.words_.push_back(std::move(w));
            } else {
                idx = it->second;
            }
            right.push_back(idx);
        }
    }
    g.order_ = elements.size();
    for (std::size_t s = 0; s < ng; ++s) g.generator_elements_.push_back(right[s]);
    g.table_.resize(g.order_ * g.order_);
    for (std::size_t a = 0; a < g.order_; ++a) {
        for (std::size_t b = 0; b < g.order_; ++b) {
            std::size_t x = a;
            for (int s : g.words_[b]) x = static_cast<std::size_t>(right[x * ng + static_cast<std::size_t>(s)]);
            g.table_[a * g.order_ + b] = static_cast<int>(x);
        }
    }
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, std::size_t order_limit) {
    const std::size_t degree = generators.empty() ? 0 : generators.front().size();
    for (const auto& p : generators) {
        if (p.size() != degree) throw InputError("permutation generators must act on the same number of points");
        std::vector<bool> seen(degree, false);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)])
                throw InputError("generator not invertible: not a permutation of 0.." + std::to_string(degree - 1));
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    FiniteGroup g = closure(generators, identity, permutation_key, compose, order_limit);
    for (const auto& p : generators) g.natural_generators_.push_back(permutation_matrix(p));
    return g;
}

FiniteGroup FiniteGroup::from_matrices(const std::vector<Matrix<Cyclotomic>>& generators, std::size_t order_limit) {
    const std::size_t degree = generators.empty() ? 0 : generators.front().rows();
    const int conductor = common_conductor(generators);
    std::vector<Matrix<Cyclotomic>> lifted;
    for (const auto& m : generators) {
        if (m.rows() != degree || m.cols() != degree) throw InputError("matrix generators must be square of equal size");
        if (rank(m) != degree) throw InputError("generator not invertible");
        lifted.push_back(lift_matrix(m, conductor));
    }
    auto mul = [](const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b) { return a * b; };
    FiniteGroup g = closure(lifted, Matrix<Cyclotomic>::identity(degree), matrix_key, mul, order_limit);
    g.natural_generators_ = lifted;
    return g;
}

void FiniteGroup::finish() {
    const std::size_t n = order_;
    inverses_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a * n + b] == 0) {
                inverses_[a] = static_cast<int>(b);
                break;
            }
    for (std::size_t a = 0; a < n; ++a) {
        if (inverses_[a] < 0) throw InternalInconsistency("group element without inverse");
        if (multiply(static_cast<int>(a), 0) != static_cast<int>(a) || multiply(0, static_cast<int>(a)) != static_cast<int>(a))
            throw InternalInconsistency("identity law fails in multiplication table");
    }

    auto check_triple = [&](int a, int b, int c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            throw InternalInconsistency("multiplication table is not associative");
    };
    const int ni = static_cast<int>(n);
    if (n <= 64) {
        for (int a = 0; a < ni; ++a)
            for (int b = 0; b < ni; ++b)
                for (int c = 0; c < ni; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, ni - 1);
        for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    orders_.assign(n, 0);
    for (int a = 0; a < ni; ++a) {
        int x = a;
        int k = 1;
        while (x != 0) {
            x = multiply(x, a);
            ++k;
        }
        orders_[static_cast<std::size_t>(a)] = k;
    }

    class_of_.assign(n, -1);
    for (int a = 0; a < ni; ++a) {
        if (class_of_[static_cast<std::size_t>(a)] >= 0) continue;
        const int cls = static_cast<int>(classes_.size());
        std::vector<int> members;
        for (int h = 0; h < ni; ++h) {
            const int c = multiply(multiply(h, a), inverse(h));
            if (class_of_[static_cast<std::size_t>(c)] < 0) {
                class_of_[static_cast<std::size_t>(c)] = cls;
                members.push_back(c);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
    }
}

int group_exponent(const FiniteGroup& group) {
    int l = 1;
    for (int a = 0; a < static_cast<int>(group.order()); ++a) l = std::lcm(l, group.element_order(a));
    return l;
}

}  // namespace syzlab
