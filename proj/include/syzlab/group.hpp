#pragma once

#include <cstddef>
#include <vector>

#include "syzlab/cyclotomic.hpp"
#include "syzlab/matrix.hpp"

namespace syzlab {

/// Images of 0..k-1; composition is (a*b)(x) = a(b(x)).
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultOrderLimit = 128;

/// A finite group given by its multiplication table. Elements are indexed
/// in breadth-first discovery order from the generators, identity first.
class FiniteGroup {
   public:
    static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                         std::size_t order_limit = kDefaultOrderLimit);
    static FiniteGroup from_matrices(const std::vector<Matrix<Cyclotomic>>& generators,
                                     std::size_t order_limit = kDefaultOrderLimit);

    std::size_t order() const { return order_; }
    int identity() const { return 0; }
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
    int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }

    int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
    std::size_t class_count() const { return classes_.size(); }
    /// Classes ordered by their first element; class 0 is {identity}.
    const std::vector<std::vector<int>>& classes() const { return classes_; }

    std::size_t generator_count() const { return generator_elements_.size(); }
    int generator_element(std::size_t i) const { return generator_elements_[i]; }
    /// Generator indices whose left-to-right product is the element.
    const std::vector<int>& word(int a) const { return words_[static_cast<std::size_t>(a)]; }

    /// The faithful matrix realization the group was generated from
    /// (permutation matrices for permutation generators).
    const std::vector<Matrix<Cyclotomic>>& natural_generators() const { return natural_generators_; }

   private:
    FiniteGroup() = default;
    template <class Element, class Key, class Mul>
    static FiniteGroup closure(const std::vector<Element>& generators, Element identity, Key key, Mul mul,
                               std::size_t order_limit);
    void finish();

    std::size_t order_ = 0;
    std::vector<int> table_;
    std::vector<int> inverses_;
    std::vector<int> orders_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> generator_elements_;
    std::vector<std::vector<int>> words_;
    std::vector<Matrix<Cyclotomic>> natural_generators_;
};

/// lcm of the element orders.
int group_exponent(const FiniteGroup& group);

Matrix<Cyclotomic> permutation_matrix(const Permutation& perm);

}  // namespace syzlab
