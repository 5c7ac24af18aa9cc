#pragma once

#include <string>
#include <vector>

#include "syzlab/invariant_ring.hpp"

namespace syzlab {

enum class GeneratorMode { Minimal, Full };

std::string to_string(GeneratorMode mode);
GeneratorMode parse_generator_mode(const std::string& text);

/// Greedy complement selection order inside each weight block.
enum class SelectionOrder { Forward, Reverse };

struct GeneratorElement {
    int degree = 0;
    Weight weight;
    SparsePolynomial poly;
};

/// A graded generating space E of R, ordered by (degree, selection index).
struct GeneratorSet {
    GeneratorMode mode = GeneratorMode::Minimal;
    std::vector<GeneratorElement> elements;
    int beta_V = 0;
    int beta_group = 0;

    std::size_t size() const { return elements.size(); }
    std::vector<int> degrees() const;
    int max_degree() const;
};

struct MinimalGenerators {
    std::vector<int> degrees;
    GeneratorSet set;
    int beta_V = 0;
    int stop = 0;
    std::vector<std::string> warnings;
};

/// Complement of (R_+ R_+)_d in R_d for d = 1..stop, picked greedily from
/// the reduced invariant basis of each weight block.
MinimalGenerators minimal_generators(InvariantRing& ring, int stop, SelectionOrder order = SelectionOrder::Forward);

struct NoetherResult {
    int value = 0;
    bool exact = false;
};

inline constexpr int kDefaultExactLimit = 8;

/// beta(C[G]) when g <= exact_limit, computed on the isotypic model of the
/// regular representation (checked against the regular character); g otherwise.
NoetherResult noether_number(const IrrepCatalog& catalog, int exact_limit = kDefaultExactLimit,
                             const RingOptions& options = {});

/// Full mode: every basis element of R_1..R_beta. Minimal mode: the minimal
/// generators, checked to lie in the full space.
GeneratorSet build_E(InvariantRing& ring, GeneratorMode mode, const NoetherResult& beta,
                     SelectionOrder order = SelectionOrder::Forward);

}  // namespace syzlab
