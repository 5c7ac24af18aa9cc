// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "syzlab/bounds.hpp"
#include "syzlab/builtin_groups.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/universal.hpp"
#include "syzlab/workbench/runner.hpp"

using namespace syzlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failed checks; the first few are reported.
struct Checker {
    Outcome out;
    void operator()(bool ok, const std::string& what) {
        if (ok) return;
        if (out.pass) out.detail = what;
        out.pass = false;
    }
};

std::string json_like(const std::vector<int>& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + "]";
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

Outcome veronese_z2() {
    Checker check;
    auto z2 = builtin_group("builtin:cyclic:2");
    const NoetherResult beta{2, true};
    auto run = make_run(isotypic_representation(z2.catalog, {0, 2}), GeneratorMode::Minimal, beta, 3);
    check(run->E.beta_V == 2, "beta(V) = " + std::to_string(run->E.beta_V));
    const auto molien = molien_series(run->ring.representation(), 4);
    check(molien == std::vector<std::size_t>{1, 0, 3, 0, 5}, "Molien series");
    for (int d = 0; d <= 4; ++d) check(run->ring.dimension(d) == molien[static_cast<std::size_t>(d)], "dim R_d vs Molien");

    const auto table = tor_table(*run->complex, 3, run->params);
    std::map<std::pair<int, int>, std::size_t> nonzero;
    for (const auto& [key, dim] : table.entries)
        if (dim) nonzero[key] = dim;
    check(nonzero == std::map<std::pair<int, int>, std::size_t>{{{0, 0}, 1}, {{1, 4}, 1}}, "TorTable entries");
    const auto algebra = oracle::veronese(2);
    for (const auto& [key, dim] : table.entries)
        check(dim == oracle::koszul_tor(algebra, key.first, key.second),
              "oracle disagrees at Tor_" + std::to_string(key.first) + "," + std::to_string(key.second));

    const auto s1 = syzygy_degree(*run->complex, 1, run->params);
    const auto s2 = syzygy_degree(*run->complex, 2, run->params);
    const auto bounds = compute_bounds(2, 2, 2, 2, 1);
    check(s1.value == 4 && bounds.derksen == 4, "s_1 = " + show(s1.value));
    check(!s2.value, "s_2 = " + show(s2.value));
    if (check.out.pass) check.out.detail = "s_1=4=(p+1)g, s_2=none, TorTable {(0,0):1,(1,4):1}";
    return check.out;
}

Outcome veronese_z3() {
    Checker check;
    auto z3 = builtin_group("builtin:cyclic:3");
    const auto reports = audit(isotypic_representation(z3.catalog, {0, 2, 0}), z3.catalog, {3, true}, 1, 1,
                               GeneratorMode::Minimal);
    const auto& r = reports.at(0);
    check(r.s_p.value == 6, "s_1 = " + show(r.s_p.value));
    check(r.bounds.derksen == 6, "derksen bound");
    check(r.bounds.theorem == 27, "theorem bound " + std::to_string(r.bounds.theorem));
    check(r.bounds.corollary == 27, "corollary bound " + std::to_string(r.bounds.corollary));
    for (auto v : {r.derksen, r.theorem, r.corollary, r.lemma2}) check(v == Verdict::Satisfied, "verdict " + to_string(v));
    const auto algebra = oracle::veronese(3);
    std::optional<int> top;
    for (int d = 0; d <= r.s_p.scanned_to; ++d)
        if (oracle::koszul_tor(algebra, 1, d)) top = d;
    check(top == 6, "oracle s_1 = " + show(top));
    if (check.out.pass) check.out.detail = "s_1=6=(1+1)3, theorem 27, corollary 27, all satisfied";
    return check.out;
}

Outcome noether_numbers() {
    Checker check;
    const std::vector<std::tuple<const char*, std::vector<int>, int>> cases{
        {"builtin:cyclic:2", {2}, 2}, {"builtin:cyclic:3", {3}, 3}, {"builtin:klein:4", {2, 2}, 3}};
    std::string seen;
    for (const auto& [name, moduli, expected] : cases) {
        const auto b = noether_number(builtin_group(name).catalog);
        const int davenport = oracle::davenport_constant(moduli);
        check(b.exact && b.value == expected && davenport == expected,
              std::string(name) + ": beta " + std::to_string(b.value) + ", Davenport " + std::to_string(davenport));
        seen += (seen.empty() ? "" : ", ") + std::to_string(b.value);
    }
    if (check.out.pass) check.out.detail = "beta = " + seen + " (regular representation = Davenport)";
    return check.out;
}

Outcome bound_suite() {
    Checker check;
    const auto chain = inequality_chain_check(12, 12);
    check(chain.pass, chain.failures.empty() ? "chain" : chain.failures.front());
    long tuples = 0;
    for (long g = 1; g <= 12; ++g)
        for (long beta = 1; beta <= g; ++beta)
            for (long m = 1; m <= g; ++m)
                for (long p = 1; p <= 12; ++p) {
                    ++tuples;
                    const auto b = compute_bounds(g, m, beta, beta * m * p + g, p);
                    check(b.delta_p == (beta - 1) * g - (m - 1) * beta * p, "delta_p");
                    check(b.derksen == (p + 1) * g, "derksen");
                    check(b.corollary == p * g * g * g, "corollary");
                    check((beta - 1) * (beta * m * p + g) + beta * p == b.theorem, "identity");
                    check(b.theorem <= b.corollary, "theorem <= p g^3");
                    check(p + g <= p * g + 1, "p + g <= pg + 1");
                }
    check(tuples == chain.tuples, "tuple count");
    if (check.out.pass) check.out.detail = std::to_string(tuples) + " tuples";
    return check.out;
}

Outcome lemma1() {
    Checker check;
    auto z2 = builtin_group("builtin:cyclic:2");
    std::vector<Lemma1Sample> samples(3);
    samples[0] = {"sign", {0, 1}, 0, std::nullopt, false};
    samples[1] = {"sign^2", {0, 2}, 0, std::nullopt, false};
    samples[2] = {"triv+sign", {1, 1}, 0, std::nullopt, false};
    const auto report = lemma1_check(z2.catalog, {2, true}, samples, 1);
    check(report.universal_k == std::vector<int>{3, 3}, "W_1 multiplicities");
    check(report.universal_dim == 6, "dim W_1 = " + std::to_string(report.universal_dim));
    check(report.pass, "s'_1(V) > s'_1(W_1) for some sample");
    std::string detail = "s'_1(W_1)=" + show(report.universal_value);
    for (const auto& s : report.samples) detail += ", " + s.label + ":" + show(s.value);
    if (check.out.pass) check.out.detail = detail;
    return check.out;
}

Outcome row_bounds() {
    Checker check;
    std::string detail;
    for (const char* name : {"builtin:cyclic:2", "builtin:cyclic:3", "builtin:sym:3"}) {
        const auto r = ring_row_bounds(builtin_group(name).catalog, 6);
        check(r.pass && r.cases.size() == 7, std::string(name) + ": ring row bound");
        for (const auto& c : r.cases)
            if (!c.result.pass) check(false, std::string(name) + " witness at d=" + std::to_string(c.degree));
    }
    const auto tor = tor_row_bounds(builtin_group("builtin:cyclic:2").catalog, {2, true}, 1);
    check(tor.k == std::vector<int>{4, 4}, "certifying k");
    check(tor.pass && !tor.cases.empty(), "Tor row bound");
    if (check.out.pass)
        check.out.detail = "R_d for d<=6 on Z/2, Z/3, S3; Tor_1 at k=(4,4) in " + std::to_string(tor.cases.size()) + " degrees";
    return check.out;
}

struct Instance {
    const char* group;
    std::vector<int> k;
};

Outcome structural() {
    Checker check;
    // Kostka unitriangularity and LR symmetry
    for (int n = 0; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& l : parts)
            for (const auto& m : parts) {
                const long k = kostka_number(l, m.parts);
                if (l == m) check(k == 1, "K(l,l) != 1");
                else if (!dominates(l, m)) check(k == 0, "Kostka not triangular");
            }
        for (const auto& l : parts)
            for (int a = 0; a <= n; ++a)
                for (const auto& m : partitions_of(a))
                    for (const auto& v : partitions_of(n - a))
                        check(lr_coefficient(l, m, v) == lr_coefficient(l, v, m), "LR symmetry");
    }

    // Molien against dense Reynolds ranks on natural representations
    for (const auto& name : builtin_group_names()) {
        const auto b = builtin_group(name);
        if (b.group->order() > 12) continue;
        const auto rep = natural_representation(b.group);
        const auto molien = molien_series(rep, 4);
        for (int d = 0; d <= 4; ++d) {
            if (monomial_count(rep.degree(), d) > 400) break;
            check(rank(reynolds_matrix(sym_power_action(rep, d))) == molien[static_cast<std::size_t>(d)],
                  name + ": Reynolds rank vs Molien at d=" + std::to_string(d));
        }
    }

    const std::vector<Instance> instances{{"builtin:cyclic:2", {0, 2}}, {"builtin:cyclic:2", {1, 1}},
                                          {"builtin:cyclic:2", {1, 2}}, {"builtin:cyclic:3", {0, 2, 0}},
                                          {"builtin:cyclic:3", {0, 1, 1}}, {"builtin:cyclic:4", {0, 1, 0, 1}},
                                          {"builtin:klein:4", {0, 1, 1, 0}}, {"builtin:sym:3", {0, 1, 1}},
                                          {"builtin:sym:3", {1, 0, 1}}};
    int instance_count = 0;
    for (const auto& inst : instances) {
        const auto b = builtin_group(inst.group);
        const auto rep = isotypic_representation(b.catalog, inst.k);
        const auto beta = noether_number(b.catalog);
        const std::string tag = std::string(inst.group) + " " + json_like(inst.k);
        auto minimal = make_run(rep, GeneratorMode::Minimal, beta, 2);
        auto reverse_opts = RunOptions{};
        reverse_opts.order = SelectionOrder::Reverse;
        auto reversed = make_run(rep, GeneratorMode::Minimal, beta, 2, reverse_opts);
        auto full = make_run(rep, GeneratorMode::Full, beta, 2);
        ++instance_count;

        // Schur reconstruction on the graded pieces of R
        for (int d = 0; d <= 4; ++d) {
            const auto dec = schur_multiplicities(ring_weights(minimal->ring, d), inst.k);
            check(dec.dimension() == minimal->ring.dimension(d), tag + ": Schur reconstruction");
        }
        // d^2 = 0 on assembled differentials
        for (int p = 1; p <= 2; ++p)
            for (int d = 0; d <= 6; ++d)
                check((full->complex->differential(p, d) * full->complex->differential(p + 1, d)).is_zero(),
                      tag + ": d^2 != 0");
        // Euler characteristic with every p
        const auto top = static_cast<int>(minimal->E.size());
        for (int d = 0; d <= 6; ++d) {
            const auto cells = minimal->complex->tor_column(d, top);
            long chi_chain = 0, chi_tor = 0;
            for (int q = 0; q <= top; ++q) {
                const long sign = q % 2 ? -1 : 1;
                chi_chain += sign * static_cast<long>(minimal->complex->chain_dimension(q, d));
                chi_tor += sign * static_cast<long>(cells[static_cast<std::size_t>(q)].dimension);
            }
            check(chi_chain == chi_tor, tag + ": Euler characteristic at d=" + std::to_string(d));
        }
        for (int p = 1; p <= 2; ++p) {
            // guard band: syzygy_degree throws if homology appears past the ceiling
            const auto a = syzygy_degree(*minimal->complex, p, minimal->params);
            const auto r = syzygy_degree(*reversed->complex, p, reversed->params);
            const auto f = syzygy_degree(*full->complex, p, full->params);
            check(a.value == r.value, tag + ": choice dependence at p=" + std::to_string(p));
            check(!a.value || (f.value && *a.value <= *f.value), tag + ": s_p(minimal) > s_p(full)");
            for (int d = a.ceiling + 1; d <= a.scanned_to; ++d)
                check(minimal->complex->tor_dimension(p, d) == 0, tag + ": guard band not empty");
        }
        // TorTable runs its own Euler and generation checks
        tor_table(*minimal->complex, 2, minimal->params);
    }
    if (check.out.pass)
        check.out.detail = std::to_string(instance_count) + " instances, |lambda|<=6 combinatorics, Reynolds on builtins";
    return check.out;
}

Outcome m_bounds() {
    Checker check;
    int count = 0;
    std::string q8;
    for (const auto& name : builtin_group_names()) {
        const auto b = builtin_group(name);
        long g = 0;
        for (int d : b.catalog.degrees()) g += static_cast<long>(d) * d;
        check(g == static_cast<long>(b.group->order()), name + ": sum of squares");
        const auto r = m_bound_check(static_cast<long>(b.catalog.size()), g, b.catalog.m());
        check(r.pass, name + ": m^2 > ng");
        if (name == "builtin:quaternion:8") {
            check(r.lhs == 36 && r.rhs == 40, "Q8 values");
            q8 = std::to_string(r.lhs) + "<=" + std::to_string(r.rhs);
        }
        ++count;
    }
    if (check.out.pass) check.out.detail = std::to_string(count) + " builtins, Q8 " + q8;
    return check.out;
}

Outcome determinism() {
    using namespace syzlab::workbench;
    Checker check;
    const fs::path corpus = SYZLAB_PROBLEM_DIR;
    const fs::path cache_dir = fs::temp_directory_path() / ("syzlab-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(cache_dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    check(!files.empty(), "empty corpus");
    RunSettings cold;
    cold.use_cache = false;
    RunSettings hot;
    hot.cache_dir = cache_dir;
    RunSettings parallel = cold;
    parallel.jobs = 4;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream text;
        text << in.rdbuf();
        const auto problem = parse_problem(text.str());
        for (auto format : {Format::Json, Format::Csv, Format::Markdown}) {
            const auto a = emit_report(run(problem, cold), format);
            check(a == emit_report(run(problem, cold), format), f.filename().string() + ": repeated run differs");
            check(a == emit_report(run(problem, parallel), format), f.filename().string() + ": --jobs changes output");
            check(a == emit_report(run(problem, hot), format), f.filename().string() + ": cache-cold differs");
            check(a == emit_report(run(problem, hot), format), f.filename().string() + ": cache-hot differs");
        }
    }
    fs::remove_all(cache_dir);
    if (check.out.pass) check.out.detail = std::to_string(files.size()) + " problems x 3 formats";
    return check.out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria{
        {1, "Veronese Z/2", 5, veronese_z2},
        {2, "cubic Veronese Z/3", 30, veronese_z3},
        {3, "Noether numbers vs Davenport", 60, noether_numbers},
        {4, "bound formula suite", 5, bound_suite},
        {5, "Lemma 1 for Z/2, p=1", 600, lemma1},
        {6, "row bounds", 900, row_bounds},
        {7, "structural invariants", 1800, structural},
        {8, "m^2 <= ng on builtins", 60, m_bounds},
        {9, "determinism and cache", 600, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
        }
        if (!outcome.pass) ++failures;
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << seconds;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << outcome.detail << " ("
                  << secs.str() << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
