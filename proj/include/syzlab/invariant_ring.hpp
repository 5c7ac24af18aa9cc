#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "syzlab/matrix.hpp"
#include "syzlab/monomial.hpp"
#include "syzlab/representation.hpp"

namespace syzlab {

/// Invariants of one degree and one torus weight. The basis is reduced:
/// basis[i] has coefficient 1 at monomials[pivots[i]] and 0 at every
/// other pivot, so coordinates of an invariant are read off at the pivots.
struct InvariantBlock {
    Weight weight;
    std::vector<Exponent> monomials;
    std::vector<std::size_t> pivots;
    std::vector<SparsePolynomial> basis;
    std::unordered_map<Exponent, std::size_t, ExponentHash> pivot_of;

    std::size_t size() const { return basis.size(); }
    /// Coordinates of an invariant of this block's degree and weight.
    std::vector<Cyclotomic> coordinates(const SparsePolynomial& f) const;
    void index_pivots();
};

/// R_d, split into weight blocks (a single block when the representation
/// carries no grading). Blocks without invariants are omitted.
struct InvariantDegree {
    int degree = 0;
    std::vector<InvariantBlock> blocks;
    std::map<Weight, std::size_t> block_of;

    std::size_t dimension() const;
    const InvariantBlock* find(const Weight& w) const;
    void index_blocks();
};

/// Optional persistence for computed degrees (the CLI backs it with its cache).
class DegreeStore {
   public:
    virtual ~DegreeStore() = default;
    virtual std::optional<InvariantDegree> load(int degree) = 0;
    virtual void save(const InvariantDegree& degree) = 0;
};

struct RingOptions {
    /// Largest dense Reynolds block.
    std::size_t monomial_limit = kDefaultMonomialLimit;
    /// Cap on monomials enumerated for one degree across all blocks.
    std::size_t enumeration_limit = 100 * kDefaultMonomialLimit;
    int jobs = 1;
    DegreeStore* store = nullptr;
};

/// dim R_0 .. dim R_D from (1/g) sum_x 1/det(I - t rho(x)).
std::vector<std::size_t> molien_series(const Representation& rep, int max_degree);

/// Reynolds image on each weight block of Sym^d(V), in reduced form.
InvariantDegree compute_invariant_degree(const Representation& rep, int degree, const RingOptions& options = {});

/// The graded ring R = Sym(V)^G, computed degree by degree on demand.
class InvariantRing {
   public:
    explicit InvariantRing(Representation rep, RingOptions options = {});

    const Representation& representation() const { return rep_; }
    std::size_t variables() const { return rep_.degree(); }
    const RingOptions& options() const { return options_; }

    /// Computes degrees 0..max_degree (in parallel when jobs > 1) and
    /// cross-checks every dimension against the Molien series.
    void prepare(int max_degree);
    int prepared_degree() const;

    /// Computed on first use; thread-safe.
    const InvariantDegree& degree(int d);
    std::size_t dimension(int d) { return degree(d).dimension(); }

    Weight weight_of(const Exponent& e) const;

   private:
    std::size_t molien_coefficient(int d);
    void install(InvariantDegree computed);

    Representation rep_;
    RingOptions options_;
    mutable std::mutex mutex_;
    std::map<int, std::unique_ptr<InvariantDegree>> degrees_;
    std::vector<std::size_t> molien_;
};

/// Basis of R_d as columns over the full graded-lex monomial basis of Sym^d(V).
Matrix<Cyclotomic> invariant_basis(const Representation& rep, int degree,
                                   std::size_t monomial_limit = kDefaultMonomialLimit);

/// Coordinates of f * h in the block `target` (f, h invariant).
std::vector<Cyclotomic> product_coordinates(const SparsePolynomial& f, const SparsePolynomial& h,
                                            const InvariantBlock& target);

}  // namespace syzlab
