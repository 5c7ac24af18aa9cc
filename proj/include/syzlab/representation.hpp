#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/cyclotomic.hpp"
#include "syzlab/group.hpp"
#include "syzlab/matrix.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab {

using Weight = std::vector<int>;

/// Torus grading of V(U) = (V_1 (x) C^k_1) + ... + (V_n (x) C^k_n): variable v
/// carries the unit weight at coordinate variable_coordinate[v]; the
/// coordinates of factor i form a contiguous slice of length k_i.
struct WeightLayout {
    std::vector<int> factor_dims;
    std::vector<int> variable_coordinate;

    int coordinate_count() const;
    int factor_offset(std::size_t factor) const;
    Weight weight_of(const Exponent& e) const;
    /// Weakly decreasing within every factor slice.
    bool is_dominant(const Weight& w) const;
    /// Number of distinct weights obtained by permuting coordinates within factors.
    std::uint64_t orbit_size(const Weight& w) const;
    /// Sorts every factor slice decreasingly.
    Weight dominant_form(Weight w) const;

    friend bool operator==(const WeightLayout&, const WeightLayout&) = default;
};

/// A matrix representation: one invertible image per group element.
class Representation {
   public:
    /// Extends generator images along the group's words and validates the
    /// homomorphism property (every pair when g <= 64, sampled above).
    static Representation from_generator_images(std::shared_ptr<const FiniteGroup> group,
                                                const std::vector<Matrix<Cyclotomic>>& generator_images);
    static Representation from_element_images(std::shared_ptr<const FiniteGroup> group,
                                              std::vector<Matrix<Cyclotomic>> images);

    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    std::size_t degree() const { return degree_; }
    const Matrix<Cyclotomic>& image(int element) const { return images_[static_cast<std::size_t>(element)]; }
    const std::vector<Matrix<Cyclotomic>>& images() const { return images_; }

    const std::optional<WeightLayout>& layout() const { return layout_; }
    /// Attaches a torus grading; every image must preserve it.
    Representation with_layout(WeightLayout layout) const;

    /// Deterministic text identifying the representation (generator images and grading).
    std::string canonical_form() const;

   private:
    Representation() = default;
    void validate() const;

    std::shared_ptr<const FiniteGroup> group_;
    std::size_t degree_ = 0;
    std::vector<Matrix<Cyclotomic>> images_;
    std::optional<WeightLayout> layout_;
};

/// Character values, one per conjugacy class.
struct Character {
    std::vector<Cyclotomic> values;
    friend bool operator==(const Character&, const Character&) = default;
};

Character character_of(const Representation& rep);

/// (1/g) sum_x chi(x) conj(psi(x))
Cyclotomic character_inner_product(const FiniteGroup& group, const Character& chi, const Character& psi);

struct IrrepCatalog {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<Representation> irreps;

    std::size_t size() const { return irreps.size(); }
    std::vector<int> degrees() const;
    /// Sum of the irreducible degrees.
    int m() const;
};

struct CatalogValidation {
    bool pass = false;
    long sum_of_squares = 0;
    std::vector<std::string> failures;
};

CatalogValidation validate_irrep_catalog(const FiniteGroup& group, const IrrepCatalog& catalog);

/// Multiplicity of each catalog irrep in rep.
std::vector<int> decompose_rep(const Representation& rep, const IrrepCatalog& catalog);

/// (1/g) sum of the given action matrices.
Matrix<Cyclotomic> reynolds_matrix(const std::vector<Matrix<Cyclotomic>>& action);

/// Action on the graded-lex monomial basis of Sym^d(V), one matrix per element.
std::vector<Matrix<Cyclotomic>> sym_power_action(const Representation& rep, int degree,
                                                 std::size_t monomial_limit = kDefaultMonomialLimit);

/// Left translation on C[G].
Representation regular_representation(std::shared_ptr<const FiniteGroup> group);

/// The realization the group was generated from.
Representation natural_representation(std::shared_ptr<const FiniteGroup> group);

/// V(U) = sum_i V_i (x) C^{k_i}, graded by the diagonal tori of the C^{k_i}.
Representation isotypic_representation(const IrrepCatalog& catalog, const std::vector<int>& multiplicities);

Representation direct_sum(const Representation& a, const Representation& b);

std::string canonical_form(const FiniteGroup& group);

}  // namespace syzlab
