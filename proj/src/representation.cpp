#include "syzlab/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "syzlab/error.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {

int WeightLayout::coordinate_count() const {
    int total = 0;
    for (int k : factor_dims) total += k;
    return total;
}

int WeightLayout::factor_offset(std::size_t factor) const {
    int offset = 0;
    for (std::size_t i = 0; i < factor; ++i) offset += factor_dims[i];
    return offset;
}

Weight WeightLayout::weight_of(const Exponent& e) const {
    Weight w(static_cast<std::size_t>(coordinate_count()), 0);
    for (std::size_t v = 0; v < e.size(); ++v) w[static_cast<std::size_t>(variable_coordinate[v])] += e[v];
    return w;
}

bool WeightLayout::is_dominant(const Weight& w) const {
    std::size_t pos = 0;
    for (int k : factor_dims) {
        for (int j = 1; j < k; ++j)
            if (w[pos + static_cast<std::size_t>(j)] > w[pos + static_cast<std::size_t>(j) - 1]) return false;
        pos += static_cast<std::size_t>(k);
    }
    return true;
}

std::uint64_t WeightLayout::orbit_size(const Weight& w) const {
    std::uint64_t total = 1;
    std::size_t pos = 0;
    for (int k : factor_dims) {
        std::map<int, int> counts;
        for (int j = 0; j < k; ++j) ++counts[w[pos + static_cast<std::size_t>(j)]];
        // multinomial k! / prod(count!) built up one factor at a time
        std::uint64_t multinomial = 1;
        int placed = 0;
        for (const auto& [value, count] : counts) {
            for (int t = 1; t <= count; ++t) {
                ++placed;
                multinomial = multinomial * static_cast<std::uint64_t>(placed) / static_cast<std::uint64_t>(t);
            }
        }
        total *= multinomial;
        pos += static_cast<std::size_t>(k);
    }
    return total;
}

Weight WeightLayout::dominant_form(Weight w) const {
    std::size_t pos = 0;
    for (int k : factor_dims) {
        std::sort(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos) + k, std::greater<>());
        pos += static_cast<std::size_t>(k);
    }
    return w;
}

Representation Representation::from_generator_images(std::shared_ptr<const FiniteGroup> group,
                                                     const std::vector<Matrix<Cyclotomic>>& generator_images) {
    if (!group) throw PreconditionError("representation requires a group");
    if (generator_images.size() != group->generator_count())
        throw InputError("expected " + std::to_string(group->generator_count()) + " generator images, got " +
                         std::to_string(generator_images.size()));
    const std::size_t degree = generator_images.empty() ? 0 : generator_images.front().rows();
    for (const auto& m : generator_images)
        if (m.rows() != degree || m.cols() != degree) throw InputError("generator images must be square of equal size");
    std::vector<Matrix<Cyclotomic>> images;
    images.reserve(group->order());
    for (int x = 0; x < static_cast<int>(group->order()); ++x) {
        Matrix<Cyclotomic> m = Matrix<Cyclotomic>::identity(degree);
        for (int s : group->word(x)) m = m * generator_images[static_cast<std::size_t>(s)];
        images.push_back(std::move(m));
    }
    for (std::size_t s = 0; s < generator_images.size(); ++s)
        if (!(images[static_cast<std::size_t>(group->generator_element(s))] == generator_images[s]))
            throw InputError("not a homomorphism: generator image disagrees with its word");
    return from_element_images(std::move(group), std::move(images));
}

Representation Representation::from_element_images(std::shared_ptr<const FiniteGroup> group,
                                                   std::vector<Matrix<Cyclotomic>> images) {
    if (!group) throw PreconditionError("representation requires a group");
    if (images.size() != group->order()) throw InputError("need one image per group element");
    Representation rep;
    rep.group_ = std::move(group);
    rep.degree_ = images.empty() ? 0 : images.front().rows();
    rep.images_ = std::move(images);
    rep.validate();
    return rep;
}

void Representation::validate() const {
    for (const auto& m : images_)
        if (m.rows() != degree_ || m.cols() != degree_) throw InputError("representation images must be square of equal size");
    if (!(images_[0] == Matrix<Cyclotomic>::identity(degree_))) throw InputError("not a homomorphism: identity image is not I");
    const int g = static_cast<int>(group_->order());
    auto check = [&](int a, int b) {
        if (!(images_[static_cast<std::size_t>(group_->multiply(a, b))] ==
              images_[static_cast<std::size_t>(a)] * images_[static_cast<std::size_t>(b)]))
            throw InputError("not a homomorphism: rho(ab) != rho(a) rho(b)");
    };
    if (g <= 64) {
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) check(a, b);
    } else {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> pick(0, g - 1);
        for (int t = 0; t < 4096; ++t) check(pick(rng), pick(rng));
    }
    for (const auto& m : images_)
        if (rank(m) != degree_) throw InputError("representation image is not invertible");
}

Representation Representation::with_layout(WeightLayout layout) const {
    if (layout.variable_coordinate.size() != degree_) throw PreconditionError("weight layout size mismatch");
    for (int c : layout.variable_coordinate)
        if (c < 0 || c >= layout.coordinate_count()) throw PreconditionError("weight coordinate out of range");
    for (const auto& m : images_)
        for (std::size_t r = 0; r < degree_; ++r)
            for (std::size_t c = 0; c < degree_; ++c)
                if (!m(r, c).is_zero() && layout.variable_coordinate[r] != layout.variable_coordinate[c])
                    throw PreconditionError("representation does not preserve the weight grading");
    Representation out = *this;
    out.layout_ = std::move(layout);
    return out;
}

std::string Representation::canonical_form() const {
    std::ostringstream os;
    os << "degree=" << degree_ << ";generators=";
    for (std::size_t s = 0; s < group_->generator_count(); ++s)
        os << images_[static_cast<std::size_t>(group_->generator_element(s))].to_string() << ";";
    if (layout_) {
        os << "factors=";
        for (int k : layout_->factor_dims) os << k << ",";
        os << ";coords=";
        for (int c : layout_->variable_coordinate) os << c << ",";
    }
    return os.str();
}

std::string canonical_form(const FiniteGroup& group) {
    std::ostringstream os;
    os << "order=" << group.order() << ";natural=";
    for (const auto& m : group.natural_generators()) os << m.to_string() << ";";
    return os.str();
}

Character character_of(const Representation& rep) {
    const FiniteGroup& g = rep.group();
    Character chi;
    for (const auto& cls : g.classes()) {
        auto trace = [&](int x) {
            Cyclotomic t;
            for (std::size_t i = 0; i < rep.degree(); ++i) t += rep.image(x)(i, i);
            return t;
        };
        Cyclotomic value = trace(cls.front());
        for (int x : cls)
            if (!(trace(x) == value)) throw InternalInconsistency("character is not a class function");
        chi.values.push_back(std::move(value));
    }
    return chi;
}

Cyclotomic character_inner_product(const FiniteGroup& group, const Character& chi, const Character& psi) {
    Cyclotomic total;
    for (std::size_t c = 0; c < group.class_count(); ++c)
        total += chi.values[c] * psi.values[c].conj() * Cyclotomic(static_cast<long>(group.classes()[c].size()));
    return total * Cyclotomic(Rational(1, static_cast<unsigned long>(group.order())));
}

std::vector<int> IrrepCatalog::degrees() const {
    std::vector<int> out;
    for (const auto& r : irreps) out.push_back(static_cast<int>(r.degree()));
    return out;
}

int IrrepCatalog::m() const {
    int total = 0;
    for (int d : degrees()) total += d;
    return total;
}

CatalogValidation validate_irrep_catalog(const FiniteGroup& group, const IrrepCatalog& catalog) {
    CatalogValidation report;
    for (int d : catalog.degrees()) report.sum_of_squares += static_cast<long>(d) * d;
    const long g = static_cast<long>(group.order());
    if (report.sum_of_squares != g)
        report.failures.push_back("sum of squared degrees is " + std::to_string(report.sum_of_squares) + ", expected " +
                                  std::to_string(g) + " (deficit " + std::to_string(g - report.sum_of_squares) + ")");
    if (catalog.size() != group.class_count())
        report.failures.push_back("catalog has " + std::to_string(catalog.size()) + " irreps but the group has " +
                                  std::to_string(group.class_count()) + " conjugacy classes");
    std::vector<Character> chars;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (catalog.irreps[i].group().order() != group.order()) {
            report.failures.push_back("irrep " + std::to_string(i) + " is defined on a different group");
            report.pass = false;
            return report;
        }
        chars.push_back(character_of(catalog.irreps[i]));
    }
    for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j = i; j < chars.size(); ++j) {
            const Cyclotomic ip = character_inner_product(group, chars[i], chars[j]);
            const Cyclotomic expected(i == j ? 1L : 0L);
            if (!(ip == expected))
                report.failures.push_back("<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) + "> = " + ip.to_string() +
                                          ", expected " + expected.to_string());
        }
    }
    report.pass = report.failures.empty();
    return report;
}

std::vector<int> decompose_rep(const Representation& rep, const IrrepCatalog& catalog) {
    const Character chi = character_of(rep);
    std::vector<int> out;
    long total = 0;
    for (const auto& irrep : catalog.irreps) {
        const Cyclotomic ip = character_inner_product(rep.group(), chi, character_of(irrep));
        const auto value = ip.as_rational();
        if (!value || value->get_den() != 1 || sgn(*value) < 0)
            throw InternalInconsistency("catalog inconsistent with group: multiplicity " + ip.to_string());
        out.push_back(static_cast<int>(value->get_num().get_si()));
        total += static_cast<long>(out.back()) * static_cast<long>(irrep.degree());
    }
    if (total != static_cast<long>(rep.degree()))
        throw InternalInconsistency("catalog inconsistent with group: multiplicities do not reconstruct the degree");
    return out;
}

Matrix<Cyclotomic> reynolds_matrix(const std::vector<Matrix<Cyclotomic>>& action) {
    if (action.empty()) throw PreconditionError("reynolds_matrix needs at least one group element");
    Matrix<Cyclotomic> sum = action.front();
    for (std::size_t i = 1; i < action.size(); ++i) sum += action[i];
    return sum * Cyclotomic(Rational(1, static_cast<unsigned long>(action.size())));
}

std::vector<Matrix<Cyclotomic>> sym_power_action(const Representation& rep, int degree, std::size_t monomial_limit) {
    if (degree < 0) throw PreconditionError("sym_power_action requires d >= 0");
    if (monomial_count(rep.degree(), degree) > monomial_limit) throw LimitExceeded("degree too large");
    const auto basis = monomials_of_degree(rep.degree(), degree);
    std::unordered_map<Exponent, std::size_t, ExponentHash> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<Matrix<Cyclotomic>> out;
    for (const auto& image : rep.images()) {
        std::vector<SparsePolynomial> forms;
        for (std::size_t j = 0; j < rep.degree(); ++j) forms.push_back(linear_form(image, j));
        Matrix<Cyclotomic> m(basis.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (const auto& term : substitute(forms, basis[c])) m(index.at(term.exponent), c) = term.coeff;
        out.push_back(std::move(m));
    }
    return out;
}

Representation regular_representation(std::shared_ptr<const FiniteGroup> group) {
    const std::size_t g = group->order();
    std::vector<Matrix<Cyclotomic>> images;
    for (int h = 0; h < static_cast<int>(g); ++h) {
        Matrix<Cyclotomic> m(g, g);
        for (int x = 0; x < static_cast<int>(g); ++x)
            m(static_cast<std::size_t>(group->multiply(h, x)), static_cast<std::size_t>(x)) = Cyclotomic(1);
        images.push_back(std::move(m));
    }
    return Representation::from_element_images(std::move(group), std::move(images));
}

Representation natural_representation(std::shared_ptr<const FiniteGroup> group) {
    auto gens = group->natural_generators();
    return Representation::from_generator_images(std::move(group), gens);
}

Representation isotypic_representation(const IrrepCatalog& catalog, const std::vector<int>& multiplicities) {
    if (multiplicities.size() != catalog.size())
        throw InputError("multiplicity vector has length " + std::to_string(multiplicities.size()) + ", expected " +
                         std::to_string(catalog.size()));
    WeightLayout layout;
    std::size_t degree = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (multiplicities[i] < 0) throw InputError("multiplicities must be nonnegative");
        layout.factor_dims.push_back(multiplicities[i]);
        degree += static_cast<std::size_t>(multiplicities[i]) * catalog.irreps[i].degree();
    }
    int coordinate = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (int b = 0; b < multiplicities[i]; ++b, ++coordinate)
            for (std::size_t a = 0; a < catalog.irreps[i].degree(); ++a) layout.variable_coordinate.push_back(coordinate);
    std::vector<Matrix<Cyclotomic>> images;
    const auto& group = catalog.group;
    for (int x = 0; x < static_cast<int>(group->order()); ++x) {
        Matrix<Cyclotomic> m(degree, degree);
        std::size_t offset = 0;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            const auto& block = catalog.irreps[i].image(x);
            const std::size_t d = block.rows();
            for (int b = 0; b < multiplicities[i]; ++b, offset += d)
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) m(offset + r, offset + c) = block(r, c);
        }
        images.push_back(std::move(m));
    }
    return Representation::from_element_images(group, std::move(images)).with_layout(std::move(layout));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.group().order() != b.group().order()) throw PreconditionError("direct_sum of representations of different groups");
    const std::size_t n = a.degree() + b.degree();
    std::vector<Matrix<Cyclotomic>> images;
    for (int x = 0; x < static_cast<int>(a.group().order()); ++x) {
        Matrix<Cyclotomic> m(n, n);
        for (std::size_t r = 0; r < a.degree(); ++r)
            for (std::size_t c = 0; c < a.degree(); ++c) m(r, c) = a.image(x)(r, c);
        for (std::size_t r = 0; r < b.degree(); ++r)
            for (std::size_t c = 0; c < b.degree(); ++c) m(a.degree() + r, a.degree() + c) = b.image(x)(r, c);
        images.push_back(std::move(m));
    }
    return Representation::from_element_images(a.group_ptr(), std::move(images));
}

}  // namespace syzlab
