#include "syzlab/invariant_ring.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "syzlab/error.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/parallel.hpp"

namespace syzlab {

std::vector<Cyclotomic> InvariantBlock::coordinates(const SparsePolynomial& f) const {
    std::vector<Cyclotomic> out(basis.size());
    for (const auto& t : f) {
        auto it = pivot_of.find(t.exponent);
        if (it != pivot_of.end()) out[it->second] = t.coeff;
    }
    return out;
}

void InvariantBlock::index_pivots() {
    pivot_of.clear();
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of.emplace(monomials[pivots[i]], i);
}

std::size_t InvariantDegree::dimension() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

const InvariantBlock* InvariantDegree::find(const Weight& w) const {
    auto it = block_of.find(w);
    return it == block_of.end() ? nullptr : &blocks[it->second];
}

void InvariantDegree::index_blocks() {
    block_of.clear();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i].index_pivots();
        block_of.emplace(blocks[i].weight, i);
    }
}

std::vector<std::size_t> molien_series(const Representation& rep, int max_degree) {
    if (max_degree < 0) return {};
    const FiniteGroup& group = rep.group();
    const std::size_t n = rep.degree();
    const auto D = static_cast<std::size_t>(max_degree);
    std::vector<Cyclotomic> total(D + 1);
    for (const auto& cls : group.classes()) {
        const auto& a = rep.image(cls.front());
        // power sums p_k = tr(a^k), then elementary symmetric e_k by Newton
        std::vector<Cyclotomic> p(n + 1);
        Matrix<Cyclotomic> power = Matrix<Cyclotomic>::identity(n);
        for (std::size_t k = 1; k <= n; ++k) {
            power = power * a;
            for (std::size_t i = 0; i < n; ++i) p[k] += power(i, i);
        }
        std::vector<Cyclotomic> e(n + 1);
        e[0] = Cyclotomic(1L);
        for (std::size_t k = 1; k <= n; ++k) {
            Cyclotomic acc;
            for (std::size_t i = 1; i <= k; ++i) {
                const Cyclotomic term = e[k - i] * p[i];
                if (i % 2) acc += term;
                else acc -= term;
            }
            e[k] = acc * Cyclotomic(Rational(1, static_cast<long>(k)));
        }
        // 1 / det(I - t a) with det(I - t a) = sum (-1)^k e_k t^k
        std::vector<Cyclotomic> c(D + 1);
        c[0] = Cyclotomic(1L);
        for (std::size_t d = 1; d <= D; ++d) {
            Cyclotomic acc;
            for (std::size_t k = 1; k <= std::min(d, n); ++k) {
                const Cyclotomic term = e[k] * c[d - k];
                if (k % 2) acc += term;
                else acc -= term;
            }
            c[d] = acc;
        }
        const Cyclotomic weight(static_cast<long>(cls.size()));
        for (std::size_t d = 0; d <= D; ++d) total[d] += weight * c[d];
    }
    std::vector<std::size_t> out(D + 1);
    const Rational inv_g(1, static_cast<long>(group.order()));
    for (std::size_t d = 0; d <= D; ++d) {
        const auto r = (total[d] * Cyclotomic(inv_g)).as_rational();
        if (!r || r->get_den() != 1 || sgn(*r) < 0)
            throw InternalInconsistency("Molien coefficient is not a natural number at degree " + std::to_string(d));
        out[d] = r->get_num().get_ui();
    }
    return out;
}

namespace {

SparsePolynomial apply_forms(const std::vector<SparsePolynomial>& forms, const Exponent& e) {
    // monomial images stay single terms for monomial matrices; only expand otherwise
    SparsePolynomial result{Term{Exponent(e.size(), 0), Cyclotomic(1L)}};
    for (std::size_t j = 0; j < e.size(); ++j) {
        for (int t = 0; t < e[j]; ++t) {
            if (forms[j].size() == 1 && result.size() == 1) {
                auto& term = result.front();
                for (std::size_t i = 0; i < term.exponent.size(); ++i)
                    term.exponent[i] = static_cast<std::uint8_t>(term.exponent[i] + forms[j].front().exponent[i]);
                term.coeff *= forms[j].front().coeff;
            } else {
                result = multiply(result, forms[j]);
            }
        }
    }
    return result;
}

using SparseRow = std::vector<std::pair<std::size_t, Cyclotomic>>;

// Sparse echelon basis of Reynolds images; rows are normalized to a unit lead.
class SparseEchelon {
   public:
    bool add(std::map<std::size_t, Cyclotomic> v) {
        auto it = v.begin();
        while (it != v.end()) {
            if (it->second.is_zero()) {
                it = v.erase(it);
                continue;
            }
            auto lead = lead_of_.find(it->first);
            if (lead == lead_of_.end()) break;
            const std::size_t k = it->first;
            const Cyclotomic factor = it->second;
            v.erase(it);
            for (const auto& [idx, val] : rows_[lead->second]) {
                if (idx == k) continue;
                auto [pos, inserted] = v.try_emplace(idx, -(factor * val));
                if (!inserted) pos->second -= factor * val;
            }
            it = v.lower_bound(k);
        }
        if (it == v.end()) return false;
        const Cyclotomic inv = it->second.inverse();
        SparseRow row;
        for (; it != v.end(); ++it)
            if (!it->second.is_zero()) row.emplace_back(it->first, it->second * inv);
        lead_of_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    /// Rows in increasing lead order, with zeros at every other lead.
    std::vector<SparseRow> reduced() const {
        std::vector<SparseRow> rows = rows_;
        std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
        std::unordered_map<std::size_t, std::size_t> lead_of;
        for (std::size_t i = 0; i < rows.size(); ++i) lead_of.emplace(rows[i].front().first, i);
        for (std::size_t i = rows.size(); i-- > 0;) {
            std::map<std::size_t, Cyclotomic> v(rows[i].begin(), rows[i].end());
            for (auto it = std::next(v.begin()); it != v.end();) {
                auto lead = lead_of.find(it->first);
                if (lead == lead_of.end() || it->second.is_zero()) {
                    ++it;
                    continue;
                }
                const std::size_t k = it->first;
                const Cyclotomic factor = it->second;
                v.erase(it);
                // rows below i in this loop are already reduced
                for (const auto& [idx, val] : rows[lead->second]) {
                    if (idx == k) continue;
                    auto [pos, inserted] = v.try_emplace(idx, -(factor * val));
                    if (!inserted) pos->second -= factor * val;
                }
                it = v.upper_bound(k);
            }
            SparseRow out;
            for (auto& [idx, val] : v)
                if (!val.is_zero()) out.emplace_back(idx, std::move(val));
            rows[i] = std::move(out);
        }
        return rows;
    }

   private:
    std::vector<SparseRow> rows_;
    std::unordered_map<std::size_t, std::size_t> lead_of_;
};

// Invariants of one weight block; stops early once `remaining` invariants were found.
InvariantBlock reduce_block(const std::vector<std::vector<SparsePolynomial>>& forms, Weight weight,
                            std::vector<Exponent> monomials, std::size_t remaining) {
    std::unordered_map<Exponent, std::size_t, ExponentHash> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    SparseEchelon echelon;
    // sum_x x.m_i; the 1/g factor does not change the span
    for (std::size_t i = 0; i < monomials.size() && echelon.rank() < remaining; ++i) {
        std::map<std::size_t, Cyclotomic> image;
        for (const auto& form : forms) {
            for (auto& t : apply_forms(form, monomials[i])) {
                auto it = index.find(t.exponent);
                if (it == index.end()) throw InternalInconsistency("group action leaves its weight block");
                image[it->second] += t.coeff;
            }
        }
        echelon.add(std::move(image));
    }
    InvariantBlock block;
    block.weight = std::move(weight);
    for (const auto& row : echelon.reduced()) {
        block.pivots.push_back(row.front().first);
        SparsePolynomial f;
        for (const auto& [idx, val] : row) f.push_back(Term{monomials[idx], val});
        std::sort(f.begin(), f.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
        block.basis.push_back(std::move(f));
    }
    block.monomials = std::move(monomials);
    return block;
}

}  // namespace

InvariantDegree compute_invariant_degree(const Representation& rep, int degree, const RingOptions& options) {
    const std::size_t n = rep.degree();
    if (monomial_count(n, degree) > options.enumeration_limit) throw LimitExceeded("degree too large");
    std::vector<Exponent> all = monomials_of_degree(n, degree);

    std::map<Weight, std::vector<Exponent>> grouped;
    if (rep.layout()) {
        for (auto& e : all) grouped[rep.layout()->weight_of(e)].push_back(std::move(e));
    } else {
        grouped[Weight{}] = std::move(all);
    }

    std::vector<std::vector<SparsePolynomial>> forms(rep.group().order());
    for (std::size_t x = 0; x < forms.size(); ++x)
        for (std::size_t j = 0; j < n; ++j) forms[x].push_back(linear_form(rep.image(static_cast<int>(x)), j));

    // the Molien coefficient says when every invariant has been found
    std::size_t remaining = molien_series(rep, degree).back();
    InvariantDegree out;
    out.degree = degree;
    for (auto& [w, monomials] : grouped) {
        if (remaining == 0) break;
        if (monomials.size() > options.monomial_limit) throw LimitExceeded("degree too large");
        InvariantBlock block = reduce_block(forms, w, std::move(monomials), remaining);
        remaining -= block.size();
        if (block.size() > 0) out.blocks.push_back(std::move(block));
    }
    out.index_blocks();
    return out;
}

InvariantRing::InvariantRing(Representation rep, RingOptions options) : rep_(std::move(rep)), options_(options) {}

std::size_t InvariantRing::molien_coefficient(int d) {
    // caller holds mutex_
    if (static_cast<int>(molien_.size()) <= d) molien_ = molien_series(rep_, std::max(2 * d, 8));
    return molien_[static_cast<std::size_t>(d)];
}

void InvariantRing::install(InvariantDegree computed) {
    std::lock_guard lock(mutex_);
    const int d = computed.degree;
    if (degrees_.count(d)) return;
    const std::size_t expected = molien_coefficient(d);
    if (computed.dimension() != expected)
        throw InternalInconsistency("dim R_" + std::to_string(d) + " = " + std::to_string(computed.dimension()) +
                                    " disagrees with Molien coefficient " + std::to_string(expected));
    degrees_.emplace(d, std::make_unique<InvariantDegree>(std::move(computed)));
}

void InvariantRing::prepare(int max_degree) {
    std::vector<int> missing;
    {
        std::lock_guard lock(mutex_);
        for (int d = 0; d <= max_degree; ++d)
            if (!degrees_.count(d)) missing.push_back(d);
        if (max_degree >= 0) molien_coefficient(max_degree);
    }
    // largest degrees first so the long jobs start early
    std::reverse(missing.begin(), missing.end());
    parallel_for(missing.size(), options_.jobs, [&](std::size_t i) { degree(missing[i]); });
}

int InvariantRing::prepared_degree() const {
    std::lock_guard lock(mutex_);
    int d = -1;
    while (degrees_.count(d + 1)) ++d;
    return d;
}

const InvariantDegree& InvariantRing::degree(int d) {
    if (d < 0) throw PreconditionError("negative degree");
    {
        std::lock_guard lock(mutex_);
        auto it = degrees_.find(d);
        if (it != degrees_.end()) return *it->second;
    }
    std::optional<InvariantDegree> loaded;
    if (options_.store) loaded = options_.store->load(d);
    if (loaded) {
        loaded->index_blocks();
        install(std::move(*loaded));
    } else {
        InvariantDegree computed = compute_invariant_degree(rep_, d, options_);
        if (options_.store) options_.store->save(computed);
        install(std::move(computed));
    }
    std::lock_guard lock(mutex_);
    return *degrees_.at(d);
}

Weight InvariantRing::weight_of(const Exponent& e) const {
    return rep_.layout() ? rep_.layout()->weight_of(e) : Weight{};
}

Matrix<Cyclotomic> invariant_basis(const Representation& rep, int degree, std::size_t monomial_limit) {
    const std::size_t n = rep.degree();
    if (monomial_count(n, degree) > monomial_limit) throw LimitExceeded("degree too large");
    RingOptions options;
    options.monomial_limit = monomial_limit;
    const InvariantDegree computed = compute_invariant_degree(rep, degree, options);
    const std::vector<Exponent> all = monomials_of_degree(n, degree);
    std::unordered_map<Exponent, std::size_t, ExponentHash> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
    std::vector<std::vector<Cyclotomic>> columns;
    for (const auto& block : computed.blocks) {
        for (const auto& f : block.basis) {
            std::vector<Cyclotomic> col(all.size());
            for (const auto& t : f) col[index.at(t.exponent)] = t.coeff;
            columns.push_back(std::move(col));
        }
    }
    return Matrix<Cyclotomic>::from_columns(all.size(), columns);
}

std::vector<Cyclotomic> product_coordinates(const SparsePolynomial& f, const SparsePolynomial& h,
                                            const InvariantBlock& target) {
    std::vector<Cyclotomic> out(target.size());
    if (f.empty() || h.empty()) return out;
    Exponent e(f.front().exponent.size());
    for (const auto& a : f) {
        for (const auto& b : h) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(a.exponent[i] + b.exponent[i]);
            auto it = target.pivot_of.find(e);
            if (it != target.pivot_of.end()) out[it->second] += a.coeff * b.coeff;
        }
    }
    return out;
}

}  // namespace syzlab
