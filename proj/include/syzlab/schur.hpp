#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/generators.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/rational.hpp"
#include "syzlab/representation.hpp"

namespace syzlab {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::vector<int> p);

    int rows() const { return static_cast<int>(parts.size()); }
    int size() const;
    /// Parts padded with zeros to the given length.
    std::vector<int> padded(std::size_t length) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of k in reverse lexicographic order ((k) first).
std::vector<Partition> partitions_of(int k, std::optional<int> max_rows = std::nullopt);

/// Dominance order on partitions of the same size.
bool dominates(const Partition& lambda, const Partition& mu);

/// Semistandard tableaux of shape lambda and content mu (any composition).
long kostka_number(const Partition& lambda, const std::vector<int>& mu);

/// Littlewood-Richardson tableaux of shape lambda/mu with content nu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// dim S_lambda(C^k) by the hook-content formula.
Integer schur_dim(const Partition& lambda, int k);

/// Dimension of each torus weight in Z^{k_1} x ... x Z^{k_n} (coordinates concatenated).
using WeightMap = std::map<Weight, std::size_t>;

struct SchurDecomposition {
    std::vector<int> factor_dims;
    std::map<std::vector<Partition>, long> multiplicities;

    /// sum of mult * prod_i dim S_{lambda_i}(C^{k_i})
    Integer dimension() const;
    /// l_i: most rows of any supported partition in factor i (0 when empty).
    std::vector<int> max_rows() const;
};

/// Kostka back-substitution over dominant weights, factor-wise dominance
/// order. `dominant_only` marks maps that list only dominant weights; full
/// maps are checked for symmetry under permutations within each factor.
SchurDecomposition schur_multiplicities(const WeightMap& weights, const std::vector<int>& factor_dims,
                                        bool dominant_only = false);

/// Total dimension of a weight map (orbit sizes applied for dominant-only maps).
Integer weight_map_dimension(const WeightMap& weights, const std::vector<int>& factor_dims, bool dominant_only);

struct RowBoundResult {
    bool pass = true;
    std::vector<std::vector<Partition>> witnesses;
};

/// Every supported lambda_i must have at most bounds[i] rows. Requires
/// k_i >= bounds[i] + 1, otherwise a violation could not be seen.
RowBoundResult row_bound_check(const SchurDecomposition& decomposition, const std::vector<int>& bounds);

/// Weights of R_d, of (Lambda^p E)_e, and of a Tor cell.
WeightMap ring_weights(InvariantRing& ring, int d);
WeightMap wedge_weights(const GeneratorSet& E, int p, int e);
WeightMap tor_weights(const TorCell& cell);

struct CauchyResult {
    bool pass = false;
    Integer lhs;
    Integer rhs;
    /// Kostka inversion of the monomial weights of Sym^d(V_i (x) C^k) gives dim S_lambda(V_i) at each lambda.
    bool weights_match = false;
};

CauchyResult cauchy_check(const IrrepCatalog& catalog, std::size_t irrep, int k, int d);

}  // namespace syzlab
