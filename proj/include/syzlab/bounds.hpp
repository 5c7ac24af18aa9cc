#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzlab/generators.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/universal.hpp"

namespace syzlab {

struct ScalarBounds {
    long delta_p = 0;  // may be negative
    long theorem = 0;
    long corollary = 0;
    long derksen = 0;
    long lemma2_ceiling = 0;
};

/// delta_p = (beta-1) g - (m-1) beta p, theorem = beta^2 m p + delta_p,
/// corollary = p g^3, derksen = (p+1) g, lemma2 = (beta-1) dim V + beta p.
ScalarBounds compute_bounds(long g, long m, long beta, long dim_V, long p);

enum class Verdict { Satisfied, Vacuous, Violated, NotCertified };
std::string to_string(Verdict v);

struct Finding {
    std::string bound;
    int p = 0;
    int value = 0;
    long limit = 0;
    std::string detail;
};

struct BoundReport {
    long g = 0;
    long n = 0;
    long m = 0;
    std::vector<int> d_list;
    int beta_V = 0;
    NoetherResult beta;
    int p = 0;
    std::size_t dim_V = 0;
    GeneratorMode mode = GeneratorMode::Minimal;
    ScalarBounds bounds;
    SyzygyResult s_p;
    SyzygyResult s_prime_p;
    Verdict theorem = Verdict::Vacuous;
    Verdict corollary = Verdict::Vacuous;
    Verdict derksen = Verdict::Vacuous;
    Verdict lemma2 = Verdict::Vacuous;
    std::vector<Finding> findings;
};

/// Proven bounds are hard assertions; the conjecture is an observable.
/// Derksen's bound is always audited on s_p (minimal E); the proven bounds
/// on s_p or s'_p as selected by `mode`.
std::vector<BoundReport> audit(const Representation& rep, const IrrepCatalog& catalog, const NoetherResult& beta,
                               int p_min, int p_max, GeneratorMode mode, const RunOptions& options = {});

/// Verdicts for one p from already computed syzygy degrees.
void judge(BoundReport& report);

struct ChainCheckResult {
    bool pass = true;
    long tuples = 0;
    std::vector<std::string> failures;
};

/// Exhaustive over 1 <= beta, m <= g <= g_max and 1 <= p <= p_max.
ChainCheckResult inequality_chain_check(int g_max = 12, int p_max = 12);

struct MBoundResult {
    bool pass = false;
    long lhs = 0;  // m^2
    long rhs = 0;  // n g
};

MBoundResult m_bound_check(long n, long g, long m);

}  // namespace syzlab
