#include "syzlab/workbench/problem.hpp"

#include <algorithm>

#include "syzlab/builtin_groups.hpp"

namespace syzlab::workbench {

namespace {

Integer decode_integer(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0) throw SchemaError(field, "not an integer string");
        return out;
    }
    throw SchemaError(field, "expected an integer");
}

json encode_integer(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

int get_int(const json& v, const std::string& field, int lo, int hi) {
    if (!v.is_number_integer()) throw SchemaError(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi)
        throw SchemaError(field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(x);
}

Rational decode_rational(const json& v, const std::string& field) {
    if (v.is_number_integer() || v.is_string()) return Rational(decode_integer(v, field));
    if (!v.is_array() || v.size() != 2) throw SchemaError(field, "expected [num, den]");
    const Integer den = decode_integer(v[1], field + "[1]");
    if (den == 0) throw SchemaError(field, "zero denominator");
    return make_rational(decode_integer(v[0], field + "[0]"), den);
}

std::vector<Matrix<Cyclotomic>> decode_matrices(const json& v, const std::string& field) {
    if (!v.is_array()) throw SchemaError(field, "expected an array of matrices");
    std::vector<Matrix<Cyclotomic>> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(decode_matrix(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

void only_keys(const json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw SchemaError(field.empty() ? key : field + "." + key, "unknown field");
    }
}

void parse_group(Problem& out, const json& g) {
    if (g.is_string()) {
        auto b = builtin_group(g.get<std::string>());
        out.group_label = b.name;
        out.group = b.group;
        out.catalog = b.catalog;
        return;
    }
    if (!g.is_object()) throw SchemaError("group", "expected a builtin name or an object");
    if (g.contains("permutation_generators")) {
        only_keys(g, "group", {"permutation_generators"});
        const auto& gens = g["permutation_generators"];
        if (!gens.is_array() || gens.empty())
            throw SchemaError("group.permutation_generators", "expected a nonempty array of permutations");
        std::vector<Permutation> perms;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string f = "group.permutation_generators[" + std::to_string(i) + "]";
            if (!gens[i].is_array()) throw SchemaError(f, "expected an array of point images");
            Permutation perm;
            for (std::size_t j = 0; j < gens[i].size(); ++j)
                perm.push_back(get_int(gens[i][j], f + "[" + std::to_string(j) + "]", 0, 1 << 20));
            perms.push_back(std::move(perm));
        }
        out.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(perms));
        out.group_label = "permutation group";
        return;
    }
    if (g.contains("matrix_generators")) {
        only_keys(g, "group", {"matrix_generators", "conductor"});
        auto mats = decode_matrices(g["matrix_generators"], "group.matrix_generators");
        if (mats.empty()) throw SchemaError("group.matrix_generators", "expected at least one matrix");
        if (g.contains("conductor")) {
            const int n = get_int(g["conductor"], "group.conductor", 1, 64);
            for (const auto& m : mats)
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        if (!m(r, c).is_rational() && n % m(r, c).conductor() != 0)
                            throw SchemaError("group.matrix_generators", "entry outside Q(zeta_" + std::to_string(n) + ")");
        }
        out.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_matrices(mats));
        out.group_label = "matrix group";
        return;
    }
    throw SchemaError("group", "expected permutation_generators or matrix_generators");
}

}  // namespace

Cyclotomic decode_cyclotomic(const json& value, const std::string& field) {
    if (!value.is_object()) return Cyclotomic(decode_rational(value, field));
    only_keys(value, field, {"conductor", "coeffs"});
    if (!value.contains("conductor") || !value.contains("coeffs"))
        throw SchemaError(field, "cyclotomic needs conductor and coeffs");
    const int n = get_int(value["conductor"], field + ".conductor", 1, 64);
    const auto& coeffs = value["coeffs"];
    if (!coeffs.is_array() || coeffs.size() > static_cast<std::size_t>(n))
        throw SchemaError(field + ".coeffs", "expected at most " + std::to_string(n) + " coefficients");
    Cyclotomic out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Rational c = decode_rational(coeffs[j], field + ".coeffs[" + std::to_string(j) + "]");
        if (!is_zero(c)) out += Cyclotomic(c) * Cyclotomic::zeta(n, static_cast<long>(j));
    }
    return out;
}

json encode_rational(const Rational& value) {
    return json::array({encode_integer(value.get_num()), encode_integer(value.get_den())});
}

json encode_cyclotomic(const Cyclotomic& value) {
    if (value.is_rational()) return encode_rational(*value.as_rational());
    json coeffs = json::array();
    for (const auto& c : value.coeffs()) coeffs.push_back(encode_rational(c));
    return json{{"conductor", value.conductor()}, {"coeffs", coeffs}};
}

Matrix<Cyclotomic> decode_matrix(const json& value, const std::string& field) {
    if (!value.is_array() || value.empty()) throw SchemaError(field, "expected a nonempty array of rows");
    const std::size_t rows = value.size();
    if (!value[0].is_array()) throw SchemaError(field + "[0]", "expected a row array");
    const std::size_t cols = value[0].size();
    Matrix<Cyclotomic> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rf = field + "[" + std::to_string(r) + "]";
        if (!value[r].is_array() || value[r].size() != cols) throw SchemaError(rf, "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = decode_cyclotomic(value[r][c], rf + "[" + std::to_string(c) + "]");
    }
    return m;
}

Problem parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // line number from the byte offset
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw SchemaError("line " + std::to_string(line), "malformed JSON (" + std::string(e.what()) + ")");
    }
    if (!doc.is_object()) throw SchemaError("document", "expected a JSON object");
    only_keys(doc, "", {"group", "rep", "catalog", "task", "p", "p_max", "mode", "options"});

    Problem out;
    out.document = doc;
    if (!doc.contains("group")) throw SchemaError("group", "missing");
    parse_group(out, doc["group"]);

    if (doc.contains("catalog")) {
        if (out.catalog) throw SchemaError("catalog", "builtin groups ship their own catalog");
        const auto& cat = doc["catalog"];
        if (!cat.is_array() || cat.empty()) throw SchemaError("catalog", "expected a nonempty array of irreducibles");
        IrrepCatalog catalog;
        catalog.group = out.group;
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const std::string f = "catalog[" + std::to_string(i) + "]";
            if (!cat[i].is_object() || !cat[i].contains("generator_images"))
                throw SchemaError(f, "expected {\"generator_images\": [...]}");
            only_keys(cat[i], f, {"generator_images"});
            auto mats = decode_matrices(cat[i]["generator_images"], f + ".generator_images");
            if (mats.size() != out.group->generator_count())
                throw SchemaError(f + ".generator_images", "one image per group generator is required");
            catalog.irreps.push_back(Representation::from_generator_images(out.group, mats));
        }
        const auto check = validate_irrep_catalog(*out.group, catalog);
        if (!check.pass) {
            std::string why;
            for (const auto& f : check.failures) why += (why.empty() ? "" : "; ") + f;
            throw SchemaError("catalog", "not a complete set of irreducibles (" + why + ")");
        }
        out.catalog = std::move(catalog);
    }

    if (doc.contains("rep")) {
        const auto& rep = doc["rep"];
        if (!rep.is_object()) throw SchemaError("rep", "expected an object");
        if (rep.contains("multiplicities")) {
            only_keys(rep, "rep", {"multiplicities"});
            if (!out.catalog) throw SchemaError("rep.multiplicities", "needs an irreducible catalog");
            const auto& ks = rep["multiplicities"];
            if (!ks.is_array()) throw SchemaError("rep.multiplicities", "expected an array");
            if (ks.size() != out.catalog->size())
                throw SchemaError("rep.multiplicities", "expected " + std::to_string(out.catalog->size()) +
                                                            " entries, one per irreducible");
            std::vector<int> k;
            for (std::size_t i = 0; i < ks.size(); ++i)
                k.push_back(get_int(ks[i], "rep.multiplicities[" + std::to_string(i) + "]", 0, 64));
            out.rep = isotypic_representation(*out.catalog, k);
            out.multiplicities = std::move(k);
        } else if (rep.contains("generator_images")) {
            only_keys(rep, "rep", {"generator_images"});
            auto mats = decode_matrices(rep["generator_images"], "rep.generator_images");
            if (mats.size() != out.group->generator_count())
                throw SchemaError("rep.generator_images", "one image per group generator is required");
            out.rep = Representation::from_generator_images(out.group, mats);
            if (out.catalog) out.multiplicities = decompose_rep(*out.rep, *out.catalog);
        } else {
            throw SchemaError("rep", "expected multiplicities or generator_images");
        }
    }

    if (doc.contains("task")) {
        if (!doc["task"].is_string()) throw SchemaError("task", "expected a string");
        out.task = doc["task"].get<std::string>();
        const auto& tasks = known_tasks();
        if (std::find(tasks.begin(), tasks.end(), out.task) == tasks.end())
            throw SchemaError("task", "unknown task '" + out.task + "'");
    }
    if (doc.contains("p")) out.p = get_int(doc["p"], "p", 1, 64);
    if (doc.contains("p_max")) out.p_max = get_int(doc["p_max"], "p_max", 0, 64);
    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) throw SchemaError("mode", "expected \"minimal\" or \"full\"");
        try {
            out.mode = parse_generator_mode(doc["mode"].get<std::string>());
        } catch (const InputError&) {
            throw SchemaError("mode", "expected \"minimal\" or \"full\"");
        }
    }
    if (doc.contains("options")) {
        if (!doc["options"].is_object()) throw SchemaError("options", "expected an object");
        out.options = doc["options"];
    }
    return out;
}

}  // namespace syzlab::workbench
