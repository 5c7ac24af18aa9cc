#include "syzlab/koszul.hpp"

#include <algorithm>

#include "syzlab/error.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/parallel.hpp"

namespace syzlab {

namespace {

std::string chain_key(const std::vector<int>& subset, int r_degree, std::size_t block) {
    std::string key;
    key.reserve(2 * subset.size() + 6);
    for (int j : subset) {
        key.push_back(static_cast<char>(j & 0xff));
        key.push_back(static_cast<char>((j >> 8) & 0xff));
    }
    key.push_back('|');
    key.push_back(static_cast<char>(r_degree & 0xff));
    for (int s = 0; s < 32; s += 8) key.push_back(static_cast<char>((block >> s) & 0xff));
    return key;
}

void add_weight(Weight& acc, const Weight& w, int sign) {
    if (acc.size() < w.size()) acc.resize(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) acc[i] += sign * w[i];
}

}  // namespace

const ChainBlock* ChainSpace::find(const Weight& w) const {
    auto it = block_of.find(w);
    return it == block_of.end() ? nullptr : &blocks[it->second];
}

KoszulComplex::KoszulComplex(InvariantRing& ring, GeneratorSet generators, int max_degree, EngineOptions options)
    : ring_(ring), E_(std::move(generators)), max_degree_(max_degree), options_(options) {
    if (options_.dominant_only && !ring_.representation().layout())
        throw PreconditionError("dominant-only homology needs a weight layout");
    for (std::size_t j = 1; j < E_.elements.size(); ++j)
        if (E_.elements[j].degree < E_.elements[j - 1].degree)
            throw PreconditionError("generators must be sorted by degree");
    for (const auto& e : E_.elements)
        if (e.degree < 1) throw PreconditionError("generators must have positive degree");
    ring_.prepare(max_degree_);
    for (int d = 0; d <= max_degree_; ++d) R_.push_back(&ring_.degree(d));
}

bool KoszulComplex::keep_weight(const Weight& w) const {
    return !options_.dominant_only || ring_.representation().layout()->is_dominant(w);
}

std::uint64_t KoszulComplex::weight_multiplicity(const Weight& w) const {
    return options_.dominant_only ? ring_.representation().layout()->orbit_size(w) : 1;
}

ChainSpace KoszulComplex::chain_space(int p, int d) const {
    if (d < 0 || d > max_degree_) throw PreconditionError("chain degree outside the prepared range");
    ChainSpace space;
    space.p = p;
    space.d = d;
    if (p < 0) return space;
    std::map<Weight, ChainBlock> grouped;
    const auto& gens = E_.elements;
    const std::size_t n = gens.size();
    std::vector<int> subset;
    Weight subset_weight;

    auto emit = [&](int e) {
        const InvariantDegree& Rr = *R_[static_cast<std::size_t>(d - e)];
        for (std::size_t b = 0; b < Rr.blocks.size(); ++b) {
            const InvariantBlock& block = Rr.blocks[b];
            Weight w = subset_weight;
            add_weight(w, block.weight, 1);
            if (!keep_weight(w)) continue;
            ChainBlock& cb = grouped[w];
            cb.offset_of.emplace(chain_key(subset, d - e, b), cb.elements.size());
            for (std::size_t l = 0; l < block.size(); ++l)
                cb.elements.push_back(ChainElement{subset, d - e, b, l});
        }
    };

    auto recurse = [&](auto&& self, std::size_t start, int e) -> void {
        if (static_cast<int>(subset.size()) == p) {
            emit(e);
            return;
        }
        const auto remaining = static_cast<std::size_t>(p) - subset.size();
        for (std::size_t j = start; j + remaining <= n; ++j) {
            // degrees are sorted, so the cheapest completion uses the next `remaining` elements
            if (e + static_cast<int>(remaining) * gens[j].degree > d) break;
            subset.push_back(static_cast<int>(j));
            add_weight(subset_weight, gens[j].weight, 1);
            self(self, j + 1, e + gens[j].degree);
            add_weight(subset_weight, gens[j].weight, -1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0, 0);

    for (auto& [w, cb] : grouped) {
        cb.weight = w;
        space.total += cb.size() * weight_multiplicity(w);
        space.block_of.emplace(w, space.blocks.size());
        space.blocks.push_back(std::move(cb));
    }
    return space;
}

std::size_t KoszulComplex::chain_dimension(int p, int d) const { return chain_space(p, d).dimension(); }

const KoszulComplex::Product& KoszulComplex::product(std::size_t generator, int r_degree, std::size_t r_block) {
    const auto key = std::make_tuple(generator, r_degree, r_block);
    {
        std::lock_guard lock(product_mutex_);
        auto it = products_.find(key);
        if (it != products_.end()) return *it->second;
    }
    const GeneratorElement& f = E_.elements[generator];
    const InvariantBlock& src = R_[static_cast<std::size_t>(r_degree)]->blocks[r_block];
    auto prod = std::make_unique<Product>();
    prod->degree = r_degree + f.degree;
    if (prod->degree > max_degree_) throw InternalInconsistency("product degree outside the prepared range");
    Weight w = src.weight;
    add_weight(w, f.weight, 1);
    const InvariantDegree& target_degree = *R_[static_cast<std::size_t>(prod->degree)];
    auto it = target_degree.block_of.find(w);
    if (it != target_degree.block_of.end()) {
        const InvariantBlock& target = target_degree.blocks[it->second];
        prod->zero = false;
        prod->block = it->second;
        prod->coords = Matrix<Cyclotomic>(target.size(), src.size());
        for (std::size_t l = 0; l < src.size(); ++l) {
            const auto col = product_coordinates(f.poly, src.basis[l], target);
            for (std::size_t r = 0; r < col.size(); ++r) prod->coords(r, l) = col[r];
        }
    }
    std::lock_guard lock(product_mutex_);
    auto [pos, inserted] = products_.emplace(key, std::move(prod));
    return *pos->second;
}

Matrix<Cyclotomic> KoszulComplex::differential_block(const ChainSpace& source, std::size_t source_block,
                                                     const ChainSpace& target) {
    const ChainBlock& src = source.blocks[source_block];
    const ChainBlock* tgt = target.find(src.weight);
    Matrix<Cyclotomic> m(tgt ? tgt->size() : 0, src.size());
    if (source.p == 0) return m;
    std::vector<int> reduced;
    for (std::size_t c = 0; c < src.size(); ++c) {
        const ChainElement& x = src.elements[c];
        for (std::size_t t = 0; t < x.subset.size(); ++t) {
            const auto j = static_cast<std::size_t>(x.subset[t]);
            const Product& prod = product(j, x.r_degree, x.block);
            if (prod.zero) continue;
            reduced = x.subset;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(t));
            if (!tgt) throw InternalInconsistency("Koszul differential leaves its weight block");
            auto it = tgt->offset_of.find(chain_key(reduced, prod.degree, prod.block));
            if (it == tgt->offset_of.end()) throw InternalInconsistency("Koszul differential leaves its weight block");
            const bool negative = t % 2 == 1;
            for (std::size_t r = 0; r < prod.coords.rows(); ++r) {
                const Cyclotomic& v = prod.coords(r, x.local);
                if (v.is_zero()) continue;
                if (negative) m(it->second + r, c) -= v;
                else m(it->second + r, c) += v;
            }
        }
    }
    return m;
}

Matrix<Cyclotomic> KoszulComplex::differential(int p, int d) {
    const ChainSpace source = chain_space(p, d);
    const ChainSpace target = chain_space(p - 1, d);
    std::size_t rows = 0, cols = 0;
    for (const auto& b : target.blocks) rows += b.size();
    for (const auto& b : source.blocks) cols += b.size();
    Matrix<Cyclotomic> full(rows, cols);
    std::vector<std::size_t> row_offset;
    std::size_t acc = 0;
    for (const auto& b : target.blocks) {
        row_offset.push_back(acc);
        acc += b.size();
    }
    std::size_t col = 0;
    for (std::size_t s = 0; s < source.blocks.size(); ++s) {
        const Matrix<Cyclotomic> block = differential_block(source, s, target);
        auto it = target.block_of.find(source.blocks[s].weight);
        for (std::size_t c = 0; c < block.cols(); ++c)
            for (std::size_t r = 0; r < block.rows(); ++r)
                if (!block(r, c).is_zero()) full(row_offset[it->second] + r, col + c) = block(r, c);
        col += source.blocks[s].size();
    }
    return full;
}

std::vector<TorCell> KoszulComplex::tor_column(int d, int p_max) {
    if (p_max < 0) return {};
    std::vector<ChainSpace> chains;
    for (int q = 0; q <= p_max + 1; ++q) chains.push_back(chain_space(q, d));
    std::vector<TorCell> out(static_cast<std::size_t>(p_max) + 1);
    for (int q = 0; q <= p_max; ++q) {
        for (const auto& block : chains[static_cast<std::size_t>(q)].blocks) {
            // ranks of d_q (out of the block) and d_{q+1} (into it), same weight
            std::size_t rank_out = 0, rank_in = 0;
            std::optional<Matrix<Cyclotomic>> d_out;
            const auto& here = chains[static_cast<std::size_t>(q)];
            const std::size_t idx = here.block_of.at(block.weight);
            if (q > 0) {
                d_out = differential_block(here, idx, chains[static_cast<std::size_t>(q - 1)]);
                rank_out = rank(*d_out);
            }
            const auto& above = chains[static_cast<std::size_t>(q + 1)];
            auto it = above.block_of.find(block.weight);
            if (it != above.block_of.end()) {
                const Matrix<Cyclotomic> d_in = differential_block(above, it->second, here);
                rank_in = rank(d_in);
                if (d_out && !(*d_out * d_in).is_zero())
                    throw InternalInconsistency("Koszul differential does not square to zero at p=" +
                                                std::to_string(q + 1) + ", d=" + std::to_string(d));
            }
            if (rank_out + rank_in > block.size())
                throw InternalInconsistency("homology rank count exceeds the chain dimension");
            const std::size_t h = block.size() - rank_out - rank_in;
            if (h == 0) continue;
            auto& cell = out[static_cast<std::size_t>(q)];
            cell.weights[block.weight] = h;
            cell.dimension += h * weight_multiplicity(block.weight);
        }
    }
    return out;
}

std::size_t KoszulComplex::tor_dimension(int p, int d) {
    if (p < 0) return 0;
    // only the two differentials around p are needed
    const ChainSpace here = chain_space(p, d);
    const ChainSpace below = chain_space(p - 1, d);
    const ChainSpace above = chain_space(p + 1, d);
    std::size_t total = 0;
    for (std::size_t b = 0; b < here.blocks.size(); ++b) {
        const ChainBlock& block = here.blocks[b];
        std::size_t rank_out = 0, rank_in = 0;
        if (p > 0) rank_out = rank(differential_block(here, b, below));
        if (auto it = above.block_of.find(block.weight); it != above.block_of.end())
            rank_in = rank(differential_block(above, it->second, here));
        total += (block.size() - rank_out - rank_in) * weight_multiplicity(block.weight);
    }
    return total;
}

long lemma2_ceiling(int beta, std::size_t dim_V, int p) {
    return static_cast<long>(beta - 1) * static_cast<long>(dim_V) + static_cast<long>(beta) * p;
}

std::size_t TorTable::at(int p, int d) const {
    auto it = entries.find({p, d});
    return it == entries.end() ? 0 : it->second;
}

std::optional<int> TorTable::top_degree(int p) const {
    std::optional<int> top;
    for (const auto& [key, dim] : entries)
        if (key.first == p && dim > 0) top = std::max(top.value_or(key.second), key.second);
    return top;
}

SyzygyResult syzygy_degree(KoszulComplex& complex, int p, const ScanParameters& params,
                           std::optional<int> ceiling_override) {
    if (p < 1) throw PreconditionError("syzygy degree needs p >= 1");
    SyzygyResult out;
    out.p = p;
    out.mode = complex.generators().mode;
    out.ceiling = ceiling_override ? *ceiling_override : static_cast<int>(lemma2_ceiling(params.beta, params.dim_V, p));
    out.scanned_to = ceiling_override ? out.ceiling : out.ceiling + params.guard.value_or(params.beta);
    if (out.scanned_to > complex.max_degree())
        throw PreconditionError("scan range exceeds the prepared degree range of the complex");
    std::vector<std::size_t> dims(static_cast<std::size_t>(out.scanned_to) + 1);
    parallel_for(dims.size(), complex.options().jobs,
                 [&](std::size_t d) { dims[d] = complex.tor_dimension(p, static_cast<int>(d)); });
    for (int d = 0; d <= out.scanned_to; ++d) {
        if (dims[static_cast<std::size_t>(d)] == 0) continue;
        if (d > out.ceiling)
            throw InternalInconsistency("ceiling violated — implementation bug or misread bound (Tor_" +
                                        std::to_string(p) + "," + std::to_string(d) + " != 0 past ceiling " +
                                        std::to_string(out.ceiling) + ")");
        out.value = d;
    }
    return out;
}

TorTable tor_table(KoszulComplex& complex, int p_max, const ScanParameters& params) {
    if (p_max < 0) throw PreconditionError("p_max must be nonnegative");
    TorTable table;
    table.mode = complex.generators().mode;
    table.p_max = p_max;
    for (int p = 0; p <= p_max; ++p)
        table.ceilings[p] = static_cast<int>(lemma2_ceiling(params.beta, params.dim_V, p));
    table.scanned_to = table.ceilings[p_max] + params.guard.value_or(params.beta);
    if (table.scanned_to > complex.max_degree())
        throw PreconditionError("scan range exceeds the prepared degree range of the complex");

    const auto count = static_cast<std::size_t>(table.scanned_to) + 1;
    std::vector<std::vector<TorCell>> columns(count);
    std::vector<std::optional<std::pair<long, long>>> euler(count);
    parallel_for(count, complex.options().jobs, [&](std::size_t d) {
        const int deg = static_cast<int>(d);
        columns[d] = complex.tor_column(deg, p_max);
        if (complex.chain_dimension(p_max + 1, deg) == 0) {
            long chi_chain = 0, chi_tor = 0;
            for (int q = 0; q <= p_max; ++q) {
                const long sign = q % 2 ? -1 : 1;
                chi_chain += sign * static_cast<long>(complex.chain_dimension(q, deg));
                chi_tor += sign * static_cast<long>(columns[d][static_cast<std::size_t>(q)].dimension);
            }
            euler[d] = std::make_pair(chi_chain, chi_tor);
        }
    });

    for (std::size_t d = 0; d < count; ++d) {
        const int deg = static_cast<int>(d);
        for (int p = 0; p <= p_max; ++p) {
            const std::size_t dim = columns[d][static_cast<std::size_t>(p)].dimension;
            table.entries[{p, deg}] = dim;
            if (dim == 0) continue;
            if (p == 0 && deg > 0)
                throw InternalInconsistency("E does not generate R in degree " + std::to_string(deg));
            if (p > 0 && deg > table.ceilings[p])
                throw InternalInconsistency("ceiling violated — implementation bug or misread bound (Tor_" +
                                            std::to_string(p) + "," + std::to_string(deg) + " != 0 past ceiling " +
                                            std::to_string(table.ceilings[p]) + ")");
        }
        if (euler[d]) {
            if (euler[d]->first != euler[d]->second)
                throw InternalInconsistency("Euler characteristic mismatch in degree " + std::to_string(deg));
            table.euler[deg] = *euler[d];
        }
    }
    if (table.at(0, 0) != 1) throw InternalInconsistency("Tor_0 in degree 0 must be one-dimensional");
    return table;
}

}  // namespace syzlab
