#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/generators.hpp"
#include "syzlab/invariant_ring.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/schur.hpp"

namespace syzlab {

/// V(U) = sum_i V_i (x) U_i with dim U_i = multiplicities[i].
struct UniversalSpec {
    std::vector<int> multiplicities;
    Representation derived_rep;
};

UniversalSpec make_spec(const IrrepCatalog& catalog, std::vector<int> multiplicities);

/// k_i = beta p + d_i; asserts dim = beta m p + g.
UniversalSpec build_universal_rep(const IrrepCatalog& catalog, const NoetherResult& beta, int p);

struct RunOptions {
    RingOptions ring;
    EngineOptions engine;
    SelectionOrder order = SelectionOrder::Forward;
};

/// Ring, generating space and Koszul complex for one representation. The
/// engine runs dominant-only whenever the representation carries a torus grading.
struct SyzygyRun {
    InvariantRing ring;
    GeneratorSet E;
    ScanParameters params;
    std::unique_ptr<KoszulComplex> complex;

    SyzygyRun(Representation rep, GeneratorMode mode, const NoetherResult& beta, int max_degree,
              const RunOptions& options = {});
    bool dominant_only() const { return complex->options().dominant_only; }
};

/// Highest degree any syzygy scan up to p_max touches: ceiling(p_max) + guard.
int scan_limit(int beta, std::size_t dim_V, int p_max, std::optional<int> guard = std::nullopt);

std::unique_ptr<SyzygyRun> make_run(Representation rep, GeneratorMode mode, const NoetherResult& beta, int p_max,
                                    const RunOptions& options = {});

struct StabilizationResult {
    bool pass = false;
    std::vector<int> k;
    std::vector<int> k_next;
    std::size_t dim_k = 0;
    std::size_t dim_k_next = 0;
};

/// Tor_{p,d} (full E) vanishes at k iff it vanishes at k + (1,...,1).
StabilizationResult stabilization_check(const IrrepCatalog& catalog, const NoetherResult& beta,
                                        const std::vector<int>& k, int p, int d, const RunOptions& options = {});

struct Lemma1Sample {
    std::string label;
    std::vector<int> multiplicities;
    std::size_t dim = 0;
    std::optional<int> value;
    bool pass = false;
};

struct Lemma1Report {
    int p = 0;
    std::vector<int> universal_k;
    std::size_t universal_dim = 0;
    std::optional<int> universal_value;
    std::vector<Lemma1Sample> samples;
    bool pass = false;
};

/// s'_p(V) <= s'_p(W_p) for every sample V (given by irrep multiplicities).
Lemma1Report lemma1_check(const IrrepCatalog& catalog, const NoetherResult& beta, std::vector<Lemma1Sample> samples,
                          int p, const RunOptions& options = {});

struct RowBoundCase {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<int> max_rows;
    RowBoundResult result;
};

struct RowBoundReport {
    std::vector<int> k;
    std::vector<int> bounds;
    std::vector<RowBoundCase> cases;
    bool pass = true;
};

/// l_i(R_d) <= d_i at k_i = d_i + 1, for d = 0..max_degree.
RowBoundReport ring_row_bounds(const IrrepCatalog& catalog, int max_degree, const RunOptions& options = {});

/// l_i(Tor_{p,d}) <= beta p + d_i at k_i = beta p + d_i + 1, over every scanned d.
RowBoundReport tor_row_bounds(const IrrepCatalog& catalog, const NoetherResult& beta, int p,
                              const RunOptions& options = {});

}  // namespace syzlab
