#include "syzlab/workbench/runner.hpp"

#include <memory>

#include "syzlab/bounds.hpp"
#include "syzlab/schur.hpp"
#include "syzlab/universal.hpp"
#include "syzlab/workbench/cache.hpp"

namespace syzlab::workbench {

Budget budget_for(const std::string& level) {
    Budget b;
    b.level = level;
    if (level == "small") {
        b.monomial_limit = 5000;
        b.exact_limit = 6;
        b.universal_dim_limit = 6;
        b.ring_row_degree = 4;
    } else if (level == "large") {
        b.monomial_limit = 100000;
        b.exact_limit = 12;
        b.universal_dim_limit = 12;
        b.tor_row_group_order = 3;
    } else if (level != "default") {
        throw InputError("unknown budget level '" + level + "' (expected small, default or large)");
    }
    return b;
}

namespace {

json opt_value(const std::optional<int>& v) { return v ? json(*v) : json("none"); }

std::string text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string text(const Verdict v) { return to_string(v); }

Partition partition_from(const json& v, const std::string& field) {
    if (!v.is_array()) throw SchemaError(field, "expected a partition array");
    std::vector<int> parts;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 64)
            throw SchemaError(field, "partition parts must be small nonnegative integers");
        parts.push_back(x.get<int>());
    }
    try {
        return Partition(parts);
    } catch (const PreconditionError& e) {
        throw SchemaError(field, e.what());
    }
}

int option_int(const json& options, const char* key, int fallback, int lo, int hi) {
    if (!options.contains(key)) return fallback;
    const auto& v = options[key];
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi)
        throw SchemaError(std::string("options.") + key,
                          "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& field) {
    if (!v.is_array()) throw SchemaError(field, "expected an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 64)
            throw SchemaError(field, "expected small nonnegative integers");
        out.push_back(x.get<int>());
    }
    return out;
}

struct Context {
    const Problem& problem;
    const RunSettings& settings;
    Budget budget;
    std::string task;
    std::optional<Cache> cache;
    std::unique_ptr<CachedDegreeStore> store;
    json parameters = json::object();
    Report report;

    const IrrepCatalog& catalog() const {
        if (!problem.catalog) throw InputError("task '" + task + "' needs an irreducible catalog (builtin group or \"catalog\")");
        return *problem.catalog;
    }
    const Representation& rep() const {
        if (!problem.rep) throw InputError("task '" + task + "' needs a representation (\"rep\")");
        return *problem.rep;
    }
    long order() const { return static_cast<long>(problem.group->order()); }

    RunOptions run_options() {
        RunOptions o;
        o.ring.monomial_limit = budget.monomial_limit;
        o.ring.enumeration_limit = 100 * budget.monomial_limit;
        o.ring.jobs = settings.jobs;
        o.engine.jobs = settings.jobs;
        return o;
    }
    RunOptions rep_options() {
        RunOptions o = run_options();
        if (cache && problem.rep) {
            store = std::make_unique<CachedDegreeStore>(
                *cache, canonical_form(*problem.group) + "|" + problem.rep->canonical_form());
            o.ring.store = store.get();
        }
        return o;
    }

    NoetherResult beta() {
        NoetherResult b;
        if (problem.catalog) b = noether_number(*problem.catalog, budget.exact_limit, run_options().ring);
        else b = NoetherResult{static_cast<int>(order()), false};
        report.result["beta"] = {{"value", b.value}, {"exact", b.exact},
                                 {"method", b.exact ? "regular representation" : "fallback beta <= g"}};
        return b;
    }

    GeneratorMode mode() const {
        if (settings.mode) return *settings.mode;
        return problem.mode.value_or(GeneratorMode::Minimal);
    }
    int p_value(int fallback) const { return settings.p.value_or(problem.p.value_or(fallback)); }
    std::optional<int> p_max_value() const {
        if (settings.p_max) return settings.p_max;
        return problem.p_max;
    }
};

void task_group(Context& c) {
    const auto& group = *c.problem.group;
    json& r = c.report.result;
    r["order"] = group.order();
    r["classes"] = group.class_count();
    std::vector<std::size_t> sizes;
    for (const auto& cls : group.classes()) sizes.push_back(cls.size());
    r["class_sizes"] = sizes;
    r["exponent"] = group_exponent(group);
    if (c.problem.catalog) {
        const auto& cat = *c.problem.catalog;
        const auto validation = validate_irrep_catalog(group, cat);
        r["catalog"] = {{"valid", validation.pass}, {"sum_of_squares", validation.sum_of_squares},
                        {"failures", validation.failures}, {"degrees", cat.degrees()}};
        const long n = static_cast<long>(cat.size());
        const long m = cat.m();
        r["n"] = n;
        r["m"] = m;
        const auto mb = m_bound_check(n, c.order(), m);
        r["m_bound"] = {{"m_squared", mb.lhs}, {"n_g", mb.rhs}, {"pass", mb.pass}};
        if (c.problem.multiplicities) r["multiplicities"] = *c.problem.multiplicities;
    } else {
        r["catalog"] = "none";
    }
    if (c.problem.rep) r["rep_degree"] = c.problem.rep->degree();
}

void task_invariants(Context& c) {
    const Representation& rep = c.rep();
    const int g = static_cast<int>(c.order());
    const int molien_degree = option_int(c.problem.options, "molien_degree", 2 * g, 0, 64);
    const int stop = option_int(c.problem.options, "generator_degree", g, 1, 64);
    c.parameters["molien_degree"] = molien_degree;
    c.parameters["generator_degree"] = stop;
    auto options = c.rep_options();
    InvariantRing ring(rep, options.ring);
    const auto molien = molien_series(rep, molien_degree);
    auto mg = minimal_generators(ring, stop);
    json& r = c.report.result;
    r["dim_V"] = rep.degree();
    r["molien"] = molien;
    r["beta_V"] = mg.beta_V;
    r["generator_count"] = mg.set.size();
    r["warnings"] = mg.warnings;
    Table mt{"molien", {"d", "dim"}, {}};
    for (std::size_t d = 0; d < molien.size(); ++d) mt.rows.push_back({std::to_string(d), std::to_string(molien[d])});
    std::map<int, int> counts;
    for (int d : mg.set.degrees()) ++counts[d];
    Table gt{"generators", {"degree", "count"}, {}};
    for (const auto& [d, k] : counts) gt.rows.push_back({std::to_string(d), std::to_string(k)});
    c.report.tables.push_back(std::move(mt));
    c.report.tables.push_back(std::move(gt));
}

void task_noether(Context& c) {
    const auto b = c.beta();
    c.report.result["g"] = c.order();
    c.report.result["within_noether_bound"] = b.value <= c.order();
}

void task_syzygies(Context& c) {
    const Representation& rep = c.rep();
    const int p_max = c.p_max_value().value_or(c.p_value(2));
    const GeneratorMode mode = c.mode();
    c.parameters["p_max"] = p_max;
    c.parameters["mode"] = to_string(mode);
    const auto beta = c.beta();
    auto options = c.rep_options();
    auto run = make_run(rep, mode, beta, p_max, options);
    const TorTable table = tor_table(*run->complex, p_max, run->params);
    json& r = c.report.result;
    r["dim_V"] = rep.degree();
    r["beta_V"] = run->E.beta_V;
    r["E_size"] = run->E.size();
    r["mode"] = to_string(mode);
    r["scanned_to"] = table.scanned_to;
    json s = json::object(), ceilings = json::object();
    for (int p = 1; p <= p_max; ++p) s[std::to_string(p)] = opt_value(table.top_degree(p));
    for (const auto& [p, ceil] : table.ceilings) ceilings[std::to_string(p)] = ceil;
    r[mode == GeneratorMode::Minimal ? "s_p" : "s_prime_p"] = s;
    r["ceilings"] = ceilings;
    r["euler_checked_degrees"] = table.euler.size();
    Table t{"tor", {"p", "d", "dim"}, {}};
    for (const auto& [key, dim] : table.entries)
        if (dim > 0) t.rows.push_back({std::to_string(key.first), std::to_string(key.second), std::to_string(dim)});
    c.report.tables.push_back(std::move(t));
}

void task_bounds(Context& c) {
    const Representation& rep = c.rep();
    const int p_min = c.p_value(1);
    const int p_max = c.p_max_value().value_or(p_min);
    if (p_max < p_min) throw InputError("p_max must be at least p");
    const GeneratorMode mode = c.mode();
    c.parameters["p"] = p_min;
    c.parameters["p_max"] = p_max;
    c.parameters["mode"] = to_string(mode);
    const auto beta = c.beta();
    const auto reports = audit(rep, c.catalog(), beta, p_min, p_max, mode, c.rep_options());
    json& r = c.report.result;
    r["g"] = c.order();
    if (!reports.empty()) {
        r["n"] = reports[0].n;
        r["m"] = reports[0].m;
        r["d_list"] = reports[0].d_list;
        r["beta_V"] = reports[0].beta_V;
        r["dim_V"] = reports[0].dim_V;
    }
    Table t{"verdicts",
            {"p", "s_p", "s_prime_p", "delta_p", "derksen_bound", "derksen", "theorem_bound", "theorem",
             "corollary_bound", "corollary", "lemma2_ceiling", "lemma2"},
            {}};
    for (const auto& b : reports) {
        t.rows.push_back({std::to_string(b.p), text(b.s_p.value), text(b.s_prime_p.value),
                          std::to_string(b.bounds.delta_p), std::to_string(b.bounds.derksen), text(b.derksen),
                          std::to_string(b.bounds.theorem), text(b.theorem), std::to_string(b.bounds.corollary),
                          text(b.corollary), std::to_string(b.bounds.lemma2_ceiling), text(b.lemma2)});
        for (const auto& f : b.findings)
            c.report.findings.push_back({{"bound", f.bound}, {"p", f.p}, {"value", f.value}, {"limit", f.limit},
                                         {"detail", f.detail}, {"group", c.problem.group_label},
                                         {"rep", rep.canonical_form()}, {"mode", to_string(b.mode)}});
    }
    c.report.tables.push_back(std::move(t));
}

void task_universal(Context& c) {
    const int p = c.p_value(1);
    c.parameters["p"] = p;
    const auto beta = c.beta();
    const auto& cat = c.catalog();
    const auto spec = build_universal_rep(cat, beta, p);
    json& r = c.report.result;
    r["k"] = spec.multiplicities;
    r["dim"] = spec.derived_rep.degree();
    r["beta_m_p_plus_g"] = static_cast<long>(beta.value) * cat.m() * p + c.order();
    if (spec.derived_rep.degree() <= c.budget.universal_dim_limit) {
        auto run = make_run(spec.derived_rep, GeneratorMode::Full, beta, p, c.run_options());
        r["s_prime_p"] = opt_value(syzygy_degree(*run->complex, p, run->params).value);
    } else {
        r["s_prime_p"] = "skipped (budget)";
    }
}

void task_schur(Context& c) {
    const auto& opts = c.problem.options;
    json& r = c.report.result;
    if (opts.contains("lr")) {
        Table t{"lr", {"lambda", "mu", "nu", "coefficient"}, {}};
        for (std::size_t i = 0; i < opts["lr"].size(); ++i) {
            const auto& q = opts["lr"][i];
            const std::string f = "options.lr[" + std::to_string(i) + "]";
            if (!q.is_array() || q.size() != 3) throw SchemaError(f, "expected [lambda, mu, nu]");
            const auto l = partition_from(q[0], f), m = partition_from(q[1], f), n = partition_from(q[2], f);
            t.rows.push_back({l.to_string(), m.to_string(), n.to_string(), std::to_string(lr_coefficient(l, m, n))});
        }
        c.report.tables.push_back(std::move(t));
    }
    if (opts.contains("kostka")) {
        Table t{"kostka", {"lambda", "content", "count"}, {}};
        for (std::size_t i = 0; i < opts["kostka"].size(); ++i) {
            const auto& q = opts["kostka"][i];
            const std::string f = "options.kostka[" + std::to_string(i) + "]";
            if (!q.is_array() || q.size() != 2) throw SchemaError(f, "expected [lambda, content]");
            const auto l = partition_from(q[0], f);
            const auto content = int_list(q[1], f);
            json shown = content;
            t.rows.push_back({l.to_string(), shown.dump(), std::to_string(kostka_number(l, content))});
        }
        c.report.tables.push_back(std::move(t));
    }
    if (!c.problem.catalog && !opts.contains("lr") && !opts.contains("kostka")) c.catalog();
    if (!c.problem.catalog) return;
    const auto& cat = c.catalog();

    Table ct{"cauchy", {"irrep", "k", "d", "lhs", "rhs", "pass"}, {}};
    const int cauchy_k = option_int(opts, "cauchy_k", 3, 0, 6);
    const int cauchy_d = option_int(opts, "cauchy_d", 4, 0, 8);
    c.parameters["cauchy_k"] = cauchy_k;
    c.parameters["cauchy_d"] = cauchy_d;
    bool cauchy_pass = true;
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (int k = 0; k <= cauchy_k; ++k)
            for (int d = 0; d <= cauchy_d; ++d) {
                const auto res = cauchy_check(cat, i, k, d);
                cauchy_pass = cauchy_pass && res.pass;
                ct.rows.push_back({std::to_string(i), std::to_string(k), std::to_string(d), res.lhs.get_str(),
                                   res.rhs.get_str(), res.pass ? "pass" : "FAIL"});
            }
    r["cauchy_pass"] = cauchy_pass;
    c.report.tables.push_back(std::move(ct));

    const int row_degree = option_int(opts, "row_degree", c.budget.ring_row_degree, 0, 12);
    c.parameters["row_degree"] = row_degree;
    const auto ring_rows = ring_row_bounds(cat, row_degree, c.run_options());
    Table rt{"ring_row_bounds", {"d", "dim", "max_rows", "pass"}, {}};
    for (const auto& rc : ring_rows.cases)
        rt.rows.push_back({std::to_string(rc.degree), std::to_string(rc.dimension), json(rc.max_rows).dump(),
                           rc.result.pass ? "pass" : "FAIL"});
    r["ring_row_bounds"] = {{"k", ring_rows.k}, {"bounds", ring_rows.bounds}, {"pass", ring_rows.pass}};
    c.report.tables.push_back(std::move(rt));

    const auto beta = c.beta();
    const int p = c.p_value(1);
    c.parameters["p"] = p;
    if (static_cast<std::size_t>(c.order()) <= c.budget.tor_row_group_order && p == 1) {
        const auto tor_rows = tor_row_bounds(cat, beta, p, c.run_options());
        json cases = json::array();
        for (const auto& tc : tor_rows.cases)
            cases.push_back({{"d", tc.degree}, {"dim", tc.dimension}, {"max_rows", tc.max_rows}, {"pass", tc.result.pass}});
        r["tor_row_bounds"] = {{"k", tor_rows.k}, {"bounds", tor_rows.bounds}, {"pass", tor_rows.pass},
                               {"cases", cases}, {"status", "checked within budget"}};
    } else {
        r["tor_row_bounds"] = {{"status", "skipped (budget)"}};
    }

    if (opts.contains("stabilization")) {
        json out = json::array();
        for (std::size_t i = 0; i < opts["stabilization"].size(); ++i) {
            const auto& s = opts["stabilization"][i];
            const std::string f = "options.stabilization[" + std::to_string(i) + "]";
            if (!s.is_object() || !s.contains("k") || !s.contains("d")) throw SchemaError(f, "expected {k, d[, p]}");
            const auto k = int_list(s["k"], f + ".k");
            const int sp = option_int(s, "p", p, 1, 16);
            const int d = option_int(s, "d", 0, 0, 64);
            const auto res = stabilization_check(cat, beta, k, sp, d, c.run_options());
            out.push_back({{"k", res.k}, {"k_next", res.k_next}, {"p", sp}, {"d", d}, {"dim_k", res.dim_k},
                           {"dim_k_next", res.dim_k_next}, {"pass", res.pass}});
        }
        r["stabilization"] = out;
    }
    if (opts.contains("lemma1_samples")) {
        std::vector<Lemma1Sample> samples;
        const auto& js = opts["lemma1_samples"];
        for (std::size_t i = 0; i < js.size(); ++i) {
            Lemma1Sample s;
            s.multiplicities = int_list(js[i], "options.lemma1_samples[" + std::to_string(i) + "]");
            s.label = json(s.multiplicities).dump();
            samples.push_back(std::move(s));
        }
        const auto res = lemma1_check(cat, beta, samples, p, c.run_options());
        json rows = json::array();
        for (const auto& s : res.samples)
            rows.push_back({{"multiplicities", s.multiplicities}, {"dim", s.dim}, {"s_prime_p", opt_value(s.value)},
                            {"pass", s.pass}});
        r["lemma1"] = {{"p", res.p}, {"universal_k", res.universal_k}, {"universal_dim", res.universal_dim},
                       {"universal_s_prime_p", opt_value(res.universal_value)}, {"samples", rows}, {"pass", res.pass}};
    }
}

void task_chain(Context& c) {
    const int g_max = option_int(c.problem.options, "g_max", 12, 1, 64);
    const int p_max = option_int(c.problem.options, "p_max", 12, 1, 64);
    c.parameters["g_max"] = g_max;
    c.parameters["chain_p_max"] = p_max;
    const auto res = inequality_chain_check(g_max, p_max);
    c.report.result["tuples"] = res.tuples;
    c.report.result["pass"] = res.pass;
    c.report.result["failures"] = res.failures;
}

}  // namespace

Report run(const Problem& problem, const RunSettings& settings) {
    Context c{problem, settings, budget_for(settings.budget_level), {}, {}, {}, {}, {}};
    c.task = settings.task.empty() ? problem.task : settings.task;
    if (c.task.empty()) throw InputError("no task given (subcommand or \"task\" field)");
    const auto& tasks = known_tasks();
    if (std::find(tasks.begin(), tasks.end(), c.task) == tasks.end()) throw InputError("unknown task '" + c.task + "'");

    // the hashed problem includes every override that changes the result
    json effective = problem.document;
    effective["task"] = c.task;
    if (settings.p) effective["p"] = *settings.p;
    if (settings.p_max) effective["p_max"] = *settings.p_max;
    if (settings.mode) effective["mode"] = to_string(*settings.mode);
    const std::string problem_hash = sha256_hex(effective.dump());

    std::string result_key;
    if (settings.use_cache) {
        c.cache.emplace(settings.cache_dir.value_or(default_cache_dir()));
        result_key = Cache::key({"report", std::to_string(kCacheFormatVersion), kToolVersion, problem_hash, c.budget.level});
        if (auto hit = c.cache->get(result_key)) {
            try {
                return report_from_json(json::parse(*hit));
            } catch (const std::exception&) {
                // unreadable payload: recompute
            }
        }
    }

    c.parameters["budget_level"] = c.budget.level;
    c.parameters["monomial_limit"] = c.budget.monomial_limit;
    c.parameters["enumeration_limit"] = 100 * c.budget.monomial_limit;
    c.parameters["exact_limit"] = c.budget.exact_limit;
    c.parameters["guard"] = "beta";
    c.parameters["ceiling"] = "(beta-1) dim V + beta p";

    if (c.task == "group") task_group(c);
    else if (c.task == "invariants") task_invariants(c);
    else if (c.task == "noether") task_noether(c);
    else if (c.task == "syzygies") task_syzygies(c);
    else if (c.task == "bounds") task_bounds(c);
    else if (c.task == "universal") task_universal(c);
    else if (c.task == "schur") task_schur(c);
    else task_chain(c);

    if (c.task == "universal") c.parameters["universal_dim_limit"] = c.budget.universal_dim_limit;
    if (c.task == "schur") c.parameters["tor_row_group_order"] = c.budget.tor_row_group_order;
    c.report.header = {{"tool", "syzlab"},     {"version", kToolVersion},   {"task", c.task},
                       {"group", problem.group_label}, {"problem_hash", problem_hash}, {"parameters", c.parameters}};
    if (c.cache) c.cache->put(result_key, report_to_json(c.report).dump());
    return c.report;
}

}  // namespace syzlab::workbench
