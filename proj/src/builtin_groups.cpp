#include "syzlab/builtin_groups.hpp"

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

using Mat = Matrix<Cyclotomic>;

Mat scalar(Cyclotomic x) { return Mat(1, 1, {std::move(x)}); }

// Sum-zero part of the permutation representation, in the basis e_i - e_{k-1}.
Mat standard_matrix(const Permutation& perm) {
    const std::size_t k = perm.size();
    Mat m(k - 1, k - 1);
    const int last = static_cast<int>(k) - 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (perm[i] != last) m(static_cast<std::size_t>(perm[i]), i) += Cyclotomic(1);
        if (perm[k - 1] != last) m(static_cast<std::size_t>(perm[k - 1]), i) -= Cyclotomic(1);
    }
    return m;
}

Cyclotomic sign_of(const Permutation& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return Cyclotomic(inversions % 2 ? -1L : 1L);
}

// Action of a permutation of {0,1,2,3} on the three pair-partitions
// {01|23}, {02|13}, {03|12}, indexed by the partner of 0.
Permutation pair_partition_action(const Permutation& perm) {
    auto index_of = [](int a, int b) {
        if (a == 0) return b - 1;
        if (b == 0) return a - 1;
        return 6 - a - b - 1;  // partner of 0 is the element outside {0, a, b}
    };
    Permutation out(3);
    for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(j)] = index_of(perm[0], perm[static_cast<std::size_t>(j + 1)]);
    return out;
}

struct Builder {
    std::shared_ptr<const FiniteGroup> group;
    IrrepCatalog catalog;

    explicit Builder(FiniteGroup g) : group(std::make_shared<const FiniteGroup>(std::move(g))) { catalog.group = group; }

    void add(const std::vector<Mat>& generator_images) {
        catalog.irreps.push_back(Representation::from_generator_images(group, generator_images));
    }
};

BuiltinGroup cyclic(int n) {
    Permutation r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
    Builder b(FiniteGroup::from_permutations({r}));
    for (int k = 0; k < n; ++k) b.add({scalar(Cyclotomic::zeta(n, k))});
    return {"builtin:cyclic:" + std::to_string(n), b.group, b.catalog};
}

BuiltinGroup dihedral(int n) {
    Permutation r, s;
    if (n == 2) {
        r = {1, 0, 3, 2};
        s = {2, 3, 0, 1};
    } else {
        for (int i = 0; i < n; ++i) {
            r.push_back((i + 1) % n);
            s.push_back((n - i) % n);
        }
    }
    Builder b(FiniteGroup::from_permutations({r, s}));
    const Cyclotomic one(1L), minus(-1L);
    b.add({scalar(one), scalar(one)});
    b.add({scalar(one), scalar(minus)});
    if (n % 2 == 0) {
        b.add({scalar(minus), scalar(one)});
        b.add({scalar(minus), scalar(minus)});
    }
    for (int k = 1; 2 * k < n; ++k) {
        Mat rot(2, 2), ref(2, 2);
        rot(0, 0) = Cyclotomic::zeta(n, k);
        rot(1, 1) = Cyclotomic::zeta(n, -k);
        ref(0, 1) = one;
        ref(1, 0) = one;
        b.add({rot, ref});
    }
    return {"builtin:dihedral:" + std::to_string(n), b.group, b.catalog};
}

BuiltinGroup symmetric3() {
    const Permutation t{1, 0, 2}, c{1, 2, 0};
    Builder b(FiniteGroup::from_permutations({t, c}));
    b.add({scalar(1L), scalar(1L)});
    b.add({scalar(sign_of(t)), scalar(sign_of(c))});
    b.add({standard_matrix(t), standard_matrix(c)});
    return {"builtin:sym:3", b.group, b.catalog};
}

BuiltinGroup symmetric4() {
    const Permutation t{1, 0, 2, 3}, c{1, 2, 3, 0};
    Builder b(FiniteGroup::from_permutations({t, c}));
    b.add({scalar(1L), scalar(1L)});
    b.add({scalar(sign_of(t)), scalar(sign_of(c))});
    b.add({standard_matrix(pair_partition_action(t)), standard_matrix(pair_partition_action(c))});
    b.add({standard_matrix(t), standard_matrix(c)});
    b.add({standard_matrix(t) * sign_of(t), standard_matrix(c) * sign_of(c)});
    return {"builtin:sym:4", b.group, b.catalog};
}

BuiltinGroup alternating4() {
    const Permutation c{1, 2, 0, 3}, v{1, 0, 3, 2};
    Builder b(FiniteGroup::from_permutations({c, v}));
    b.add({scalar(1L), scalar(1L)});
    b.add({scalar(Cyclotomic::zeta(3, 1)), scalar(1L)});
    b.add({scalar(Cyclotomic::zeta(3, 2)), scalar(1L)});
    b.add({standard_matrix(c), standard_matrix(v)});
    return {"builtin:alt:4", b.group, b.catalog};
}

BuiltinGroup quaternion8() {
    const Cyclotomic i = Cyclotomic::zeta(4, 1);
    Mat qi(2, 2), qj(2, 2);
    qi(0, 0) = i;
    qi(1, 1) = -i;
    qj(0, 1) = Cyclotomic(1L);
    qj(1, 0) = Cyclotomic(-1L);
    Builder b(FiniteGroup::from_matrices({qi, qj}));
    for (long si : {1L, -1L})
        for (long sj : {1L, -1L}) b.add({scalar(si), scalar(sj)});
    b.add({qi, qj});
    return {"builtin:quaternion:8", b.group, b.catalog};
}

BuiltinGroup klein4() {
    const Permutation a{1, 0, 3, 2}, c{2, 3, 0, 1};
    Builder b(FiniteGroup::from_permutations({a, c}));
    for (long sa : {1L, -1L})
        for (long sc : {1L, -1L}) b.add({scalar(sa), scalar(sc)});
    return {"builtin:klein:4", b.group, b.catalog};
}

int parse_parameter(const std::string& text, const std::string& name) {
    if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("unknown builtin " + name);
    return std::stoi(text);
}

}  // namespace

BuiltinGroup builtin_group(const std::string& name) {
    const std::string prefix = "builtin:";
    if (name.rfind(prefix, 0) != 0) throw InputError("unknown builtin " + name);
    const std::string rest = name.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("unknown builtin " + name);
    const std::string family = rest.substr(0, colon);
    const int n = parse_parameter(rest.substr(colon + 1), name);
    if (family == "cyclic" && n >= 1 && n <= 12) return cyclic(n);
    if (family == "dihedral" && n >= 2 && n <= 6) return dihedral(n);
    if (family == "sym" && n == 3) return symmetric3();
    if (family == "sym" && n == 4) return symmetric4();
    if (family == "alt" && n == 4) return alternating4();
    if (family == "quaternion" && n == 8) return quaternion8();
    if (family == "klein" && n == 4) return klein4();
    throw InputError("unknown builtin " + name);
}

std::vector<std::string> builtin_group_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("builtin:cyclic:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) names.push_back("builtin:dihedral:" + std::to_string(n));
    for (const char* s : {"builtin:sym:3", "builtin:sym:4", "builtin:alt:4", "builtin:quaternion:8", "builtin:klein:4"})
        names.emplace_back(s);
    return names;
}

}  // namespace syzlab
