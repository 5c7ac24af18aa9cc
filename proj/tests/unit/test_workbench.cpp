#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include <unistd.h>

#include "helpers.hpp"
#include "syzlab/universal.hpp"
#include "syzlab/workbench/cache.hpp"
#include "syzlab/workbench/runner.hpp"

using namespace syzlab;
using namespace syzlab::workbench;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("syzlab-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kAntipodal = R"({"group":"builtin:cyclic:2","rep":{"multiplicities":[0,2]},"task":"syzygies","p":1})";

}  // namespace

TEST_CASE("problem parsing") {
    auto p = parse_problem(kAntipodal);
    CHECK(p.task == "syzygies");
    CHECK(p.p == 1);
    REQUIRE(p.rep);
    CHECK(p.rep->degree() == 2);
    CHECK(p.multiplicities == std::vector<int>{0, 2});

    CHECK_THROWS_AS(parse_problem(R"({"group":"builtin:cyclic:2","rep":{"multiplicities":[0,2,1]}})"), SchemaError);
    CHECK_THROWS_WITH(parse_problem(R"({"group":"builtin:cyclic:2","rep":{"multiplicities":[0,2,1]}})"),
                      doctest::Contains("rep.multiplicities"));
    CHECK_THROWS_WITH(parse_problem(R"({"group":"builtin:nope:2"})"), doctest::Contains("unknown builtin"));
    CHECK_THROWS_WITH(parse_problem(R"({"group":"builtin:cyclic:2","colour":1})"), doctest::Contains("colour"));
    CHECK_THROWS_WITH(parse_problem("{\n\"group\":\n}"), doctest::Contains("line 3"));
    // Z/3 generator sent to a reflection: rho(r)^3 != 1
    CHECK_THROWS_WITH(parse_problem(R"({"group":"builtin:cyclic:3","rep":{"generator_images":[[[-1]]]}})"),
                      doctest::Contains("not a homomorphism"));
    CHECK_THROWS_WITH(parse_problem(R"({"group":"builtin:cyclic:2","task":"dance"})"), doctest::Contains("task"));

    auto explicit_rep = parse_problem(R"({"group":"builtin:cyclic:2","rep":{"generator_images":[[[-1,0],[0,-1]]]}})");
    CHECK(explicit_rep.multiplicities == std::vector<int>{0, 2});
}

TEST_CASE("cyclotomic wire encoding") {
    const auto z = decode_cyclotomic(json::parse(R"({"conductor":3,"coeffs":[[0,1],[1,1]]})"), "x");
    CHECK(z == Cyclotomic::zeta(3));
    CHECK(decode_cyclotomic(json::parse("[3,6]"), "x") == Cyclotomic(Rational(1, 2)));
    CHECK(decode_cyclotomic(json::parse("-4"), "x") == Cyclotomic(-4));
    // zeta_4^2 + 1 = 0
    CHECK(decode_cyclotomic(json::parse(R"({"conductor":4,"coeffs":[[1,1],[0,1],[1,1]]})"), "x").is_zero());
    for (int n : {1, 3, 5, 8, 12}) {
        const Cyclotomic a = Cyclotomic::zeta(n, 1) * Cyclotomic(Rational(2, 7)) + Cyclotomic(Rational(-5, 3));
        CHECK(decode_cyclotomic(encode_cyclotomic(a), "x") == a);
    }
    CHECK_THROWS_AS(decode_cyclotomic(json::parse("[1,0]"), "x"), SchemaError);
    CHECK(encode_rational(make_rational(-6, 4)).dump() == "[-3,2]");
}

TEST_CASE("cache entries") {
    auto dir = scratch("cache");
    Cache cache(dir);
    const auto key = Cache::key({"a", "b"});
    CHECK(key != Cache::key({"ab", ""}));
    CHECK_FALSE(cache.get(key));
    cache.put(key, "payload\nwith lines");
    CHECK(cache.get(key) == std::string("payload\nwith lines"));

    Cache bumped(dir, kCacheFormatVersion + 1);
    CHECK_FALSE(bumped.get(key));
    CHECK(fs::exists(dir / (key + ".entry")));

    {
        std::ofstream out(dir / (key + ".entry"), std::ios::app);
        out << "tampered";
    }
    CHECK_FALSE(cache.get(key));
    CHECK_FALSE(fs::exists(dir / (key + ".entry")));

    std::vector<std::jthread> writers;
    for (int i = 0; i < 8; ++i) writers.emplace_back([&] { cache.put(key, "same"); });
    writers.clear();
    CHECK(cache.get(key) == std::string("same"));
    std::size_t leftovers = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().string().find(".tmp.") != std::string::npos) ++leftovers;
    CHECK(leftovers == 0);
    fs::remove_all(dir);
}

TEST_CASE("invariant degrees survive the cache") {
    auto dir = scratch("degrees");
    Cache cache(dir);
    auto s3 = builtin_group("builtin:sym:3");
    auto rep = isotypic_representation(s3.catalog, {0, 1, 1});
    std::map<std::pair<int, int>, std::size_t> cold_tor;
    {
        CachedDegreeStore store(cache, rep.canonical_form());
        RunOptions options;
        options.ring.store = &store;
        auto run = make_run(rep, GeneratorMode::Minimal, {4, true}, 1, options);
        for (int d = 0; d <= 8; ++d) cold_tor[{1, d}] = run->complex->tor_dimension(1, d);
    }
    CachedDegreeStore store(cache, rep.canonical_form());
    for (int d = 0; d <= 4; ++d) {
        auto loaded = store.load(d);
        REQUIRE(loaded);
        auto fresh = compute_invariant_degree(rep, d);
        CHECK(serialize_degree(*loaded) == serialize_degree(fresh));
    }
    RunOptions options;
    options.ring.store = &store;
    auto hot = make_run(rep, GeneratorMode::Minimal, {4, true}, 1, options);
    for (int d = 0; d <= 8; ++d) CHECK(hot->complex->tor_dimension(1, d) == cold_tor[{1, d}]);
    fs::remove_all(dir);
}

TEST_CASE("reports") {
    RunSettings settings;
    settings.use_cache = false;
    auto problem = parse_problem(kAntipodal);
    settings.p_max = 2;
    auto report = run(problem, settings);
    CHECK(emit_report(report, Format::Csv) == "p,d,dim\n0,0,1\n1,4,1\n");
    CHECK(report.result["s_p"]["1"] == 4);
    CHECK(report.result["s_p"]["2"] == "none");
    CHECK(report.findings.empty());
    CHECK(report.header["parameters"]["exact_limit"] == kDefaultExactLimit);
    CHECK(report.header["problem_hash"].get<std::string>().size() == 64);

    settings.task = "bounds";
    settings.p_max.reset();
    auto bounds = run(problem, settings);
    REQUIRE(bounds.tables.size() == 1);
    const auto& row = bounds.tables[0].rows.at(0);
    CHECK(row[1] == "4");
    CHECK(row[4] == "4");
    CHECK(row[5] == "satisfied");
    CHECK(row[6] == "8");
    CHECK(row[8] == "8");

    settings.task = "universal";
    auto universal = run(problem, settings);
    CHECK(universal.result["k"] == json::array({3, 3}));
    CHECK(universal.result["dim"] == 6);

    settings.task = "group";
    auto group = run(parse_problem(R"({"group":"builtin:sym:3"})"), settings);
    CHECK(group.result["order"] == 6);
    CHECK(group.result["n"] == 3);
    CHECK(group.result["m"] == 4);
    CHECK(group.result["m_bound"]["pass"] == true);

    settings.task = "invariants";
    CHECK_THROWS_AS(run(parse_problem(R"({"group":"builtin:sym:3"})"), settings), InputError);
    settings.budget_level = "enormous";
    CHECK_THROWS_AS(run(problem, settings), InputError);
}

TEST_CASE("reports are deterministic and cache transparent") {
    auto dir = scratch("reports");
    RunSettings cold;
    cold.use_cache = false;
    RunSettings hot;
    hot.cache_dir = dir;
    for (const char* doc : {kAntipodal, R"({"group":"builtin:cyclic:3","rep":{"multiplicities":[0,2,0]},"task":"bounds"})",
                            R"({"group":"builtin:sym:3","rep":{"multiplicities":[1,0,1]},"task":"invariants"})"}) {
        const auto problem = parse_problem(doc);
        for (auto format : {Format::Json, Format::Csv, Format::Markdown}) {
            const auto a = emit_report(run(problem, cold), format);
            const auto b = emit_report(run(problem, cold), format);
            const auto c = emit_report(run(problem, hot), format);
            const auto d = emit_report(run(problem, hot), format);
            CHECK(a == b);
            CHECK(a == c);
            CHECK(a == d);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("limits and exit codes") {
    CHECK(exit_code(ErrorKind::Input) == 1);
    CHECK(exit_code(ErrorKind::Limit) == 2);
    CHECK(exit_code(ErrorKind::Internal) == 3);
    RunSettings settings;
    settings.use_cache = false;
    settings.budget_level = "small";
    // 12 variables, Sym^8 far past the small monomial budget in one weight block
    auto problem = parse_problem(R"({"group":"builtin:cyclic:1","rep":{"multiplicities":[12]},"task":"invariants",
                                    "options":{"generator_degree":1,"molien_degree":2}})");
    CHECK_NOTHROW(run(problem, settings));
    auto big = parse_problem(R"({"group":{"permutation_generators":[[0]]},
        "rep":{"generator_images":[[[1,0,0,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0,0,0],[0,0,0,1,0,0,0,0,0,0],[0,0,0,0,1,0,0,0,0,0],
                                    [0,0,0,0,0,1,0,0,0,0],[0,0,0,0,0,0,1,0,0,0],[0,0,0,0,0,0,0,1,0,0],[0,0,0,0,0,0,0,0,1,0],[0,0,0,0,0,0,0,0,0,1]]]},
        "task":"invariants","options":{"generator_degree":6,"molien_degree":6}})");
    try {
        run(big, settings);
        CHECK_MESSAGE(false, "expected a limit error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Limit);
    }
}
