#include "syzlab/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw PreconditionError("partition parts must be nonnegative");
        if (i > 0 && parts[i] > parts[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::padded(std::size_t length) const {
    std::vector<int> out = parts;
    out.resize(std::max(length, parts.size()), 0);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

std::vector<Partition> partitions_of(int k, std::optional<int> max_rows) {
    if (k < 0) throw PreconditionError("partitions_of needs k >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    const int rows = max_rows.value_or(k);
    std::function<void(int, int)> rec = [&](int rest, int largest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == rows) return;
        for (int v = std::min(rest, largest); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    const std::size_t n = std::max(lambda.parts.size(), mu.parts.size());
    const auto a = lambda.padded(n), b = mu.padded(n);
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return true;
}

namespace {

// Count chains of horizontal strips from `shape` up to `target` with sizes content[j..].
long count_strips(const std::vector<int>& target, std::vector<int>& shape, const std::vector<int>& content, std::size_t j,
                  std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (j == content.size()) return shape == target ? 1 : 0;
    const auto key = std::make_pair(shape, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    // row r may grow up to min(target[r], old[r-1]): at most one box per column
    const std::vector<int> old = shape;
    std::function<void(std::size_t, int)> grow = [&](std::size_t row, int rest) {
        if (row == shape.size()) {
            if (rest == 0) total += count_strips(target, shape, content, j + 1, memo);
            return;
        }
        const int upper = std::min(target[row], row == 0 ? target[0] : old[row - 1]);
        for (int add = 0; add <= std::min(rest, upper - old[row]); ++add) {
            shape[row] = old[row] + add;
            grow(row + 1, rest - add);
        }
        shape[row] = old[row];
    };
    grow(0, content[j]);
    memo.emplace(key, total);
    return total;
}

}  // namespace

long kostka_number(const Partition& lambda, const std::vector<int>& mu) {
    int total = 0;
    for (int x : mu) {
        if (x < 0) throw PreconditionError("content entries must be nonnegative");
        total += x;
    }
    if (total != lambda.size()) throw PreconditionError("kostka_number: size mismatch");
    std::vector<int> shape(lambda.parts.size(), 0);
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return count_strips(lambda.parts, shape, mu, 0, memo);
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (mu.rows() > lambda.rows()) return 0;
    const auto inner = mu.padded(lambda.parts.size());
    for (std::size_t r = 0; r < inner.size(); ++r)
        if (inner[r] > lambda.parts[r]) return 0;
    // cells of lambda/mu in reading order: rows top to bottom, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = lambda.parts[static_cast<std::size_t>(r)] - 1; c >= inner[static_cast<std::size_t>(r)]; --c)
            cells.emplace_back(r, c);
    std::map<std::pair<int, int>, int> filled;
    std::vector<int> count(nu.parts.size() + 1, 0);
    long total = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = static_cast<int>(nu.parts.size());
        int lo = 1;
        if (auto right = filled.find({r, c + 1}); right != filled.end()) hi = std::min(hi, right->second);
        if (auto above = filled.find({r - 1, c}); above != filled.end()) lo = std::max(lo, above->second + 1);
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= nu.parts[static_cast<std::size_t>(v) - 1]) continue;
            // lattice word: never more v's than (v-1)'s so far
            if (v > 1 && count[static_cast<std::size_t>(v)] + 1 > count[static_cast<std::size_t>(v) - 1]) continue;
            ++count[static_cast<std::size_t>(v)];
            filled[{r, c}] = v;
            fill(idx + 1);
            filled.erase({r, c});
            --count[static_cast<std::size_t>(v)];
        }
    };
    fill(0);
    return total;
}

Integer schur_dim(const Partition& lambda, int k) {
    if (lambda.rows() > k) return 0;
    Integer num = 1, den = 1;
    std::vector<int> conj(lambda.parts.empty() ? 0 : static_cast<std::size_t>(lambda.parts[0]), 0);
    for (int len : lambda.parts)
        for (int c = 0; c < len; ++c) ++conj[static_cast<std::size_t>(c)];
    for (int r = 0; r < lambda.rows(); ++r) {
        for (int c = 0; c < lambda.parts[static_cast<std::size_t>(r)]; ++c) {
            num *= k + c - r;
            den *= (lambda.parts[static_cast<std::size_t>(r)] - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
        }
    }
    if (num % den != 0) throw InternalInconsistency("hook-content quotient is not an integer");
    return num / den;
}

Integer SchurDecomposition::dimension() const {
    Integer total = 0;
    for (const auto& [tuple, mult] : multiplicities) {
        Integer term = mult;
        for (std::size_t i = 0; i < tuple.size(); ++i) term *= schur_dim(tuple[i], factor_dims[i]);
        total += term;
    }
    return total;
}

std::vector<int> SchurDecomposition::max_rows() const {
    std::vector<int> out(factor_dims.size(), 0);
    for (const auto& [tuple, mult] : multiplicities)
        if (mult > 0)
            for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = std::max(out[i], tuple[i].rows());
    return out;
}

Integer weight_map_dimension(const WeightMap& weights, const std::vector<int>& factor_dims, bool dominant_only) {
    WeightLayout layout;
    layout.factor_dims = factor_dims;
    Integer total = 0;
    for (const auto& [w, dim] : weights) {
        Integer term = static_cast<unsigned long>(dim);
        if (dominant_only) term *= static_cast<unsigned long>(layout.orbit_size(w));
        total += term;
    }
    return total;
}

SchurDecomposition schur_multiplicities(const WeightMap& weights, const std::vector<int>& factor_dims,
                                        bool dominant_only) {
    SchurDecomposition out;
    out.factor_dims = factor_dims;
    WeightLayout layout;
    layout.factor_dims = factor_dims;
    const auto coords = static_cast<std::size_t>(layout.coordinate_count());

    std::vector<std::pair<Weight, std::size_t>> dominant;
    for (const auto& [w, dim] : weights) {
        if (w.size() != coords) throw PreconditionError("weight length does not match the factor dimensions");
        if (dim == 0) continue;
        if (layout.is_dominant(w)) {
            dominant.emplace_back(w, dim);
        } else {
            if (dominant_only) throw PreconditionError("non-dominant weight in a dominant-only weight map");
            auto it = weights.find(layout.dominant_form(w));
            if (it == weights.end() || it->second != dim)
                throw InternalInconsistency("weight data inconsistent: not symmetric within a factor");
        }
    }
    if (!dominant_only) {
        Integer orbit_total = 0, plain_total = 0;
        for (const auto& [w, dim] : dominant) orbit_total += Integer(static_cast<unsigned long>(dim)) * static_cast<unsigned long>(layout.orbit_size(w));
        for (const auto& [w, dim] : weights) plain_total += static_cast<unsigned long>(dim);
        if (orbit_total != plain_total)
            throw InternalInconsistency("weight data inconsistent: orbits incomplete");
    }
    // lexicographically decreasing order refines factor-wise dominance
    std::sort(dominant.begin(), dominant.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    auto slice = [&](const Weight& w, std::size_t factor) {
        const auto start = static_cast<std::size_t>(layout.factor_offset(factor));
        return std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(start),
                                w.begin() + static_cast<std::ptrdiff_t>(start) + factor_dims[factor]);
    };
    std::map<std::pair<Partition, std::vector<int>>, long> kostka_memo;
    auto kostka = [&](const Partition& lambda, const std::vector<int>& content) -> long {
        if (lambda.size() != std::accumulate(content.begin(), content.end(), 0)) return 0;
        auto key = std::make_pair(lambda, content);
        if (auto it = kostka_memo.find(key); it != kostka_memo.end()) return it->second;
        return kostka_memo[key] = kostka_number(lambda, content);
    };

    std::vector<std::pair<std::vector<Partition>, long>> found;
    for (const auto& [w, dim] : dominant) {
        long rest = static_cast<long>(dim);
        for (const auto& [tuple, mult] : found) {
            long k = mult;
            for (std::size_t i = 0; i < factor_dims.size() && k != 0; ++i) k *= kostka(tuple[i], slice(w, i));
            rest -= k;
        }
        if (rest < 0) throw InternalInconsistency("weight data inconsistent: negative Schur multiplicity");
        if (rest == 0) continue;
        std::vector<Partition> tuple;
        for (std::size_t i = 0; i < factor_dims.size(); ++i) tuple.emplace_back(slice(w, i));
        found.emplace_back(tuple, rest);
        out.multiplicities[tuple] = rest;
    }
    if (out.dimension() != weight_map_dimension(weights, factor_dims, dominant_only))
        throw InternalInconsistency("Schur decomposition does not reconstruct the dimension");
    return out;
}

RowBoundResult row_bound_check(const SchurDecomposition& decomposition, const std::vector<int>& bounds) {
    if (bounds.size() != decomposition.factor_dims.size())
        throw PreconditionError("one row bound per factor is required");
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (decomposition.factor_dims[i] < bounds[i] + 1)
            throw PreconditionError("factor dimension too small to certify bound");
    RowBoundResult out;
    for (const auto& [tuple, mult] : decomposition.multiplicities) {
        if (mult == 0) continue;
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            if (tuple[i].rows() > bounds[i]) {
                out.pass = false;
                out.witnesses.push_back(tuple);
                break;
            }
        }
    }
    return out;
}

WeightMap ring_weights(InvariantRing& ring, int d) {
    WeightMap out;
    for (const auto& block : ring.degree(d).blocks) out[block.weight] += block.size();
    return out;
}

WeightMap wedge_weights(const GeneratorSet& E, int p, int e) {
    WeightMap out;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int deg) {
        if (static_cast<int>(chosen.size()) == p) {
            if (deg != e) return;
            Weight w;
            for (int j : chosen) {
                const auto& u = E.elements[static_cast<std::size_t>(j)].weight;
                if (w.size() < u.size()) w.resize(u.size(), 0);
                for (std::size_t i = 0; i < u.size(); ++i) w[i] += u[i];
            }
            ++out[w];
            return;
        }
        for (std::size_t j = start; j < E.elements.size(); ++j) {
            if (deg + E.elements[j].degree > e) break;
            chosen.push_back(static_cast<int>(j));
            rec(j + 1, deg + E.elements[j].degree);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

WeightMap tor_weights(const TorCell& cell) {
    WeightMap out;
    for (const auto& [w, dim] : cell.weights) out[w] = dim;
    return out;
}

CauchyResult cauchy_check(const IrrepCatalog& catalog, std::size_t irrep, int k, int d) {
    if (irrep >= catalog.size()) throw PreconditionError("irrep index out of range");
    if (k < 0 || d < 0) throw PreconditionError("cauchy_check needs k, d >= 0");
    const int di = static_cast<int>(catalog.irreps[irrep].degree());
    CauchyResult out;
    // dim Sym^d(C^N) = C(N + d - 1, d)
    Integer lhs = 1;
    if (di * k == 0) {
        lhs = d == 0 ? 1 : 0;
    } else {
        mpz_bin_uiui(lhs.get_mpz_t(), static_cast<unsigned long>(di * k + d - 1), static_cast<unsigned long>(d));
    }
    out.lhs = lhs;
    std::map<Partition, Integer> expected;
    Integer rhs = 0;
    for (const auto& lambda : partitions_of(d, std::min(di, k))) {
        const Integer a = schur_dim(lambda, di);
        rhs += a * schur_dim(lambda, k);
        if (a != 0 && k > 0) expected[lambda] = a;
    }
    out.rhs = rhs;

    // weights of Sym^d(V_i (x) C^k) under the torus of C^k: each coordinate
    // carries d_i variables, so weight w has prod_b C(d_i + w_b - 1, w_b) monomials
    WeightMap weights;
    if (k > 0) {
        std::vector<int> w(static_cast<std::size_t>(k), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rest) {
            if (pos + 1 == w.size()) {
                w[pos] = rest;
                Integer dim = 1;
                for (int x : w) {
                    Integer c;
                    if (di == 0) c = x == 0 ? 1 : 0;
                    else mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(di + x - 1), static_cast<unsigned long>(x));
                    dim *= c;
                }
                if (dim != 0) weights[w] = dim.get_ui();
                return;
            }
            for (int x = rest; x >= 0; --x) {
                w[pos] = x;
                rec(pos + 1, rest - x);
            }
        };
        rec(0, d);
    }
    const auto decomposition = schur_multiplicities(weights, {k});
    std::map<Partition, Integer> got;
    for (const auto& [tuple, mult] : decomposition.multiplicities) got[tuple[0]] = mult;
    out.weights_match = k == 0 ? true : got == expected;
    out.pass = out.lhs == out.rhs && out.weights_match;
    return out;
}

}  // namespace syzlab
