#pragma once

#include <memory>

#include "syzlab/builtin_groups.hpp"
#include "syzlab/generators.hpp"

namespace testing_support {

using namespace syzlab;

inline std::shared_ptr<const FiniteGroup> share(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

// Z/k acting on C^vars by a primitive k-th root of unity on every coordinate, no grading.
inline Representation scalar_action(int k, int vars, int power = 1) {
    Permutation r(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % k;
    auto g = share(FiniteGroup::from_permutations({r}));
    Matrix<Cyclotomic> m(static_cast<std::size_t>(vars), static_cast<std::size_t>(vars));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = Cyclotomic::zeta(k, power);
    return Representation::from_generator_images(g, {m});
}

inline Representation diagonal_z2(const std::vector<long>& signs) {
    auto g = share(FiniteGroup::from_permutations({{1, 0}}));
    Matrix<Cyclotomic> m(signs.size(), signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) m(i, i) = Cyclotomic(signs[i]);
    return Representation::from_generator_images(g, {m});
}

inline Representation trivial_action(int vars) {
    auto g = share(FiniteGroup::from_permutations({{0}}));
    return Representation::from_generator_images(g, {Matrix<Cyclotomic>::identity(static_cast<std::size_t>(vars))});
}

}  // namespace testing_support
