#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "syzlab/generators.hpp"
#include "syzlab/invariant_ring.hpp"

namespace syzlab {

/// One basis vector r (x) e_S of R (x) Lambda^p E: r is basis element
/// `local` of weight block `block` of R_{r_degree}; S is strictly increasing.
struct ChainElement {
    std::vector<int> subset;
    int r_degree = 0;
    std::size_t block = 0;
    std::size_t local = 0;
};

struct ChainBlock {
    Weight weight;
    std::vector<ChainElement> elements;
    /// (subset, r_degree, block) -> index of its local-0 element
    std::unordered_map<std::string, std::size_t> offset_of;
    std::size_t size() const { return elements.size(); }
};

/// (R (x) Lambda^p E)_d split by weight.
struct ChainSpace {
    int p = 0;
    int d = 0;
    std::vector<ChainBlock> blocks;
    std::map<Weight, std::size_t> block_of;

    /// Dimension of the whole chain space, counting every weight orbit.
    std::size_t total = 0;

    std::size_t dimension() const { return total; }
    const ChainBlock* find(const Weight& w) const;
};

struct EngineOptions {
    int jobs = 1;
    /// Work on dominant weights only and multiply by orbit sizes (needs a layout).
    bool dominant_only = false;
};

/// Tor_{p,d} split by weight (dominant weights only when the engine runs dominant-only).
struct TorCell {
    std::size_t dimension = 0;
    std::map<Weight, std::size_t> weights;
};

/// The complex R (x) Lambda^* E with r (x) e_{j_1..j_p} -> sum_t (-1)^(t-1) (r e_{j_t}) (x) e_{..^j_t..}.
class KoszulComplex {
   public:
    /// Prepares R up to max_degree.
    KoszulComplex(InvariantRing& ring, GeneratorSet generators, int max_degree, EngineOptions options = {});

    InvariantRing& ring() { return ring_; }
    const GeneratorSet& generators() const { return E_; }
    int max_degree() const { return max_degree_; }
    const EngineOptions& options() const { return options_; }

    /// Chain basis at (p, d); weight blocks are dominant-only when the engine is.
    ChainSpace chain_space(int p, int d) const;
    /// Total chain dimension (all weights, independent of dominant_only).
    std::size_t chain_dimension(int p, int d) const;

    /// Differential restricted to one weight block (rows: target, columns: source).
    Matrix<Cyclotomic> differential_block(const ChainSpace& source, std::size_t source_block, const ChainSpace& target);
    /// Full differential (p, d) -> (p - 1, d) on the chain bases in block order.
    Matrix<Cyclotomic> differential(int p, int d);

    /// Tor_{q,d} for q = 0..p_max, checking d^2 = 0 on every composable pair computed.
    std::vector<TorCell> tor_column(int d, int p_max);
    std::size_t tor_dimension(int p, int d);

   private:
    struct Product {
        bool zero = true;
        int degree = 0;
        std::size_t block = 0;
        Matrix<Cyclotomic> coords;  // target block size x source block size
    };
    const Product& product(std::size_t generator, int r_degree, std::size_t r_block);
    bool keep_weight(const Weight& w) const;
    std::uint64_t weight_multiplicity(const Weight& w) const;

    InvariantRing& ring_;
    GeneratorSet E_;
    int max_degree_;
    EngineOptions options_;
    std::vector<const InvariantDegree*> R_;
    std::mutex product_mutex_;
    std::map<std::tuple<std::size_t, int, std::size_t>, std::unique_ptr<Product>> products_;
};

struct ScanParameters {
    int beta = 1;
    std::size_t dim_V = 0;
    /// Extra degrees scanned past the ceiling; defaults to beta when unset.
    std::optional<int> guard;
};

/// (beta - 1) dim V + beta p
long lemma2_ceiling(int beta, std::size_t dim_V, int p);

struct SyzygyResult {
    int p = 0;
    std::optional<int> value;  // nullopt: Tor_p vanishes in every scanned degree
    GeneratorMode mode = GeneratorMode::Minimal;
    int ceiling = 0;
    int scanned_to = 0;
};

struct TorTable {
    GeneratorMode mode = GeneratorMode::Minimal;
    int p_max = 0;
    std::map<std::pair<int, int>, std::size_t> entries;  // (p, d) -> dim, all scanned cells
    std::map<int, int> ceilings;                          // p -> ceiling
    int scanned_to = 0;
    /// Alternating chain and Tor sums per degree, when the full p range was computed.
    std::map<int, std::pair<long, long>> euler;

    std::size_t at(int p, int d) const;
    std::optional<int> top_degree(int p) const;
};

/// Max d <= ceiling with Tor_{p,d} != 0. Without an override the scan runs
/// through a guard band past the ceiling, and homology there is a hard error.
SyzygyResult syzygy_degree(KoszulComplex& complex, int p, const ScanParameters& params,
                           std::optional<int> ceiling_override = std::nullopt);

/// Tor_{p,d} for 0 <= p <= p_max and d up to max ceiling + guard; verifies
/// that E generates R (Tor_{0,d} = 0 for d > 0), the guard bands, and the
/// Euler characteristic in every degree where all p were computed.
TorTable tor_table(KoszulComplex& complex, int p_max, const ScanParameters& params);

}  // namespace syzlab
