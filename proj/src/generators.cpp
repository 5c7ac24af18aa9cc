#include "syzlab/generators.hpp"

#include <algorithm>

#include "syzlab/error.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {

std::string to_string(GeneratorMode mode) { return mode == GeneratorMode::Minimal ? "minimal" : "full"; }

GeneratorMode parse_generator_mode(const std::string& text) {
    if (text == "minimal") return GeneratorMode::Minimal;
    if (text == "full") return GeneratorMode::Full;
    throw InputError("mode must be \"minimal\" or \"full\", got \"" + text + "\"");
}

std::vector<int> GeneratorSet::degrees() const {
    std::vector<int> out;
    for (const auto& e : elements) out.push_back(e.degree);
    return out;
}

int GeneratorSet::max_degree() const {
    int m = 0;
    for (const auto& e : elements) m = std::max(m, e.degree);
    return m;
}

namespace {

// w - u, or false when some coordinate goes negative
bool subtract(const Weight& w, const Weight& u, Weight& out) {
    out.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[i] = w[i] - u[i];
        if (out[i] < 0) return false;
    }
    return true;
}

}  // namespace

MinimalGenerators minimal_generators(InvariantRing& ring, int stop, SelectionOrder order) {
    MinimalGenerators out;
    out.stop = stop;
    out.set.mode = GeneratorMode::Minimal;
    const int g = static_cast<int>(ring.representation().group().order());
    if (stop < g)
        out.warnings.push_back("stop degree " + std::to_string(stop) + " is below the group order " +
                               std::to_string(g) + "; generators above it are not searched");
    ring.prepare(stop);
    auto& gens = out.set.elements;
    Weight src_weight;
    for (int d = 1; d <= stop; ++d) {
        const InvariantDegree& Rd = ring.degree(d);
        for (const auto& block : Rd.blocks) {
            IncrementalEchelon<Cyclotomic> span(block.size());
            // decomposables: earlier generators times invariants of complementary degree
            for (const auto& f : gens) {
                if (span.rank() == block.size()) break;
                if (f.degree >= d) continue;
                if (!subtract(block.weight, f.weight, src_weight)) continue;
                const InvariantBlock* src = ring.degree(d - f.degree).find(src_weight);
                if (!src) continue;
                for (const auto& h : src->basis) {
                    span.add(product_coordinates(f.poly, h, block));
                    if (span.rank() == block.size()) break;
                }
            }
            if (span.rank() == block.size()) continue;
            std::vector<std::size_t> candidates(block.size());
            for (std::size_t k = 0; k < candidates.size(); ++k) candidates[k] = k;
            if (order == SelectionOrder::Reverse) std::reverse(candidates.begin(), candidates.end());
            for (std::size_t k : candidates) {
                std::vector<Cyclotomic> unit(block.size());
                unit[k] = Cyclotomic(1L);
                if (span.add(std::move(unit))) gens.push_back(GeneratorElement{d, block.weight, block.basis[k]});
                if (span.rank() == block.size()) break;
            }
        }
    }
    // keep the (degree, selection) ordering; blocks were visited by degree already
    for (const auto& f : gens) {
        out.degrees.push_back(f.degree);
        out.beta_V = std::max(out.beta_V, f.degree);
    }
    out.set.beta_V = out.beta_V;
    return out;
}

NoetherResult noether_number(const IrrepCatalog& catalog, int exact_limit, const RingOptions& options) {
    const FiniteGroup& group = *catalog.group;
    const int g = static_cast<int>(group.order());
    if (g > exact_limit) return NoetherResult{g, false};
    const std::vector<int> degrees = catalog.degrees();
    const Representation regular = regular_representation(catalog.group);
    if (decompose_rep(regular, catalog) != degrees)
        throw InternalInconsistency("regular representation does not decompose as sum d_i V_i");
    InvariantRing ring(isotypic_representation(catalog, degrees), options);
    const MinimalGenerators mg = minimal_generators(ring, g);
    if (mg.beta_V > g) throw InternalInconsistency("generator found above the group order");
    return NoetherResult{mg.beta_V, true};
}

GeneratorSet build_E(InvariantRing& ring, GeneratorMode mode, const NoetherResult& beta, SelectionOrder order) {
    GeneratorSet out;
    out.mode = mode;
    out.beta_group = beta.value;
    MinimalGenerators mg = minimal_generators(ring, beta.value, order);
    if (mg.beta_V > beta.value) throw InternalInconsistency("beta(V) exceeds the Noether number");
    out.beta_V = mg.beta_V;
    if (mode == GeneratorMode::Minimal) {
        out.elements = std::move(mg.set.elements);
        return out;
    }
    for (int d = 1; d <= beta.value; ++d)
        for (const auto& block : ring.degree(d).blocks)
            for (const auto& f : block.basis) out.elements.push_back(GeneratorElement{d, block.weight, f});
    return out;
}

}  // namespace syzlab
