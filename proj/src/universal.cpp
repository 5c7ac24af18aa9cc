#include "syzlab/universal.hpp"

#include "syzlab/error.hpp"
#include "syzlab/parallel.hpp"

namespace syzlab {

UniversalSpec make_spec(const IrrepCatalog& catalog, std::vector<int> multiplicities) {
    if (multiplicities.size() != catalog.size())
        throw PreconditionError("one multiplicity per irreducible is required");
    for (int k : multiplicities)
        if (k < 0) throw PreconditionError("multiplicities must be nonnegative");
    auto rep = isotypic_representation(catalog, multiplicities);
    const auto degrees = catalog.degrees();
    std::size_t expected = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        expected += static_cast<std::size_t>(degrees[i]) * static_cast<std::size_t>(multiplicities[i]);
    if (rep.degree() != expected) throw InternalInconsistency("isotypic model has the wrong degree");
    return UniversalSpec{std::move(multiplicities), std::move(rep)};
}

UniversalSpec build_universal_rep(const IrrepCatalog& catalog, const NoetherResult& beta, int p) {
    if (p < 1) throw PreconditionError("universal representation needs p >= 1");
    const auto degrees = catalog.degrees();
    std::vector<int> k;
    long g = 0;
    for (int d : degrees) {
        k.push_back(beta.value * p + d);
        g += static_cast<long>(d) * d;
    }
    auto spec = make_spec(catalog, k);
    const long expected = static_cast<long>(beta.value) * catalog.m() * p + g;
    if (static_cast<long>(spec.derived_rep.degree()) != expected)
        throw InternalInconsistency("universal representation dimension differs from beta m p + g");
    return spec;
}

SyzygyRun::SyzygyRun(Representation rep, GeneratorMode mode, const NoetherResult& beta, int max_degree,
                     const RunOptions& options)
    : ring(std::move(rep), options.ring) {
    ring.prepare(max_degree);
    E = build_E(ring, mode, beta, options.order);
    params.beta = beta.value;
    params.dim_V = ring.variables();
    EngineOptions engine = options.engine;
    if (ring.representation().layout()) engine.dominant_only = true;
    complex = std::make_unique<KoszulComplex>(ring, E, max_degree, engine);
}

int scan_limit(int beta, std::size_t dim_V, int p_max, std::optional<int> guard) {
    return static_cast<int>(lemma2_ceiling(beta, dim_V, p_max)) + guard.value_or(beta);
}

std::unique_ptr<SyzygyRun> make_run(Representation rep, GeneratorMode mode, const NoetherResult& beta, int p_max,
                                    const RunOptions& options) {
    const int limit = scan_limit(beta.value, rep.degree(), p_max);
    return std::make_unique<SyzygyRun>(std::move(rep), mode, beta, limit, options);
}

StabilizationResult stabilization_check(const IrrepCatalog& catalog, const NoetherResult& beta,
                                        const std::vector<int>& k, int p, int d, const RunOptions& options) {
    StabilizationResult out;
    out.k = k;
    out.k_next = k;
    for (int& x : out.k_next) ++x;
    auto tor_at = [&](const std::vector<int>& dims) {
        auto spec = make_spec(catalog, dims);
        SyzygyRun run(spec.derived_rep, GeneratorMode::Full, beta, d, options);
        return run.complex->tor_dimension(p, d);
    };
    out.dim_k = tor_at(out.k);
    out.dim_k_next = tor_at(out.k_next);
    out.pass = (out.dim_k == 0) == (out.dim_k_next == 0);
    return out;
}

Lemma1Report lemma1_check(const IrrepCatalog& catalog, const NoetherResult& beta, std::vector<Lemma1Sample> samples,
                          int p, const RunOptions& options) {
    Lemma1Report out;
    out.p = p;
    auto spec = build_universal_rep(catalog, beta, p);
    out.universal_k = spec.multiplicities;
    out.universal_dim = spec.derived_rep.degree();
    auto s_prime = [&](Representation rep) {
        auto run = make_run(std::move(rep), GeneratorMode::Full, beta, p, options);
        return syzygy_degree(*run->complex, p, run->params).value;
    };
    out.universal_value = s_prime(spec.derived_rep);
    out.pass = true;
    for (auto& sample : samples) {
        auto rep = make_spec(catalog, sample.multiplicities).derived_rep;
        sample.dim = rep.degree();
        sample.value = s_prime(std::move(rep));
        // "none" is below everything
        sample.pass = !sample.value || (out.universal_value && *sample.value <= *out.universal_value);
        out.pass = out.pass && sample.pass;
    }
    out.samples = std::move(samples);
    return out;
}

namespace {

RowBoundCase row_case(int degree, const WeightMap& weights, const std::vector<int>& k, const std::vector<int>& bounds,
                      bool dominant_only) {
    RowBoundCase c;
    c.degree = degree;
    const auto decomposition = schur_multiplicities(weights, k, dominant_only);
    c.dimension = decomposition.dimension().get_ui();
    c.max_rows = decomposition.max_rows();
    c.result = row_bound_check(decomposition, bounds);
    return c;
}

}  // namespace

RowBoundReport ring_row_bounds(const IrrepCatalog& catalog, int max_degree, const RunOptions& options) {
    RowBoundReport out;
    out.bounds = catalog.degrees();
    for (int d : out.bounds) out.k.push_back(d + 1);
    auto spec = make_spec(catalog, out.k);
    InvariantRing ring(spec.derived_rep, options.ring);
    ring.prepare(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        out.cases.push_back(row_case(d, ring_weights(ring, d), out.k, out.bounds, false));
        if (out.cases.back().dimension != ring.dimension(d))
            throw InternalInconsistency("Schur decomposition of R_d has the wrong dimension");
        out.pass = out.pass && out.cases.back().result.pass;
    }
    return out;
}

RowBoundReport tor_row_bounds(const IrrepCatalog& catalog, const NoetherResult& beta, int p,
                              const RunOptions& options) {
    if (p < 1) throw PreconditionError("row bounds on Tor need p >= 1");
    RowBoundReport out;
    for (int d : catalog.degrees()) {
        out.bounds.push_back(beta.value * p + d);
        out.k.push_back(beta.value * p + d + 1);
    }
    auto spec = make_spec(catalog, out.k);
    auto run = make_run(spec.derived_rep, GeneratorMode::Full, beta, p, options);
    const int limit = run->complex->max_degree();
    std::vector<TorCell> cells(static_cast<std::size_t>(limit) + 1);
    parallel_for(cells.size(), options.engine.jobs, [&](std::size_t d) {
        cells[d] = run->complex->tor_column(static_cast<int>(d), p)[static_cast<std::size_t>(p)];
    });
    for (int d = 0; d <= limit; ++d) {
        const auto& cell = cells[static_cast<std::size_t>(d)];
        if (cell.dimension == 0) continue;
        out.cases.push_back(row_case(d, tor_weights(cell), out.k, out.bounds, run->dominant_only()));
        if (out.cases.back().dimension != cell.dimension)
            throw InternalInconsistency("Schur decomposition of Tor has the wrong dimension");
        out.pass = out.pass && out.cases.back().result.pass;
    }
    return out;
}

}  // namespace syzlab
