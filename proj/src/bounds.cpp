#include "syzlab/bounds.hpp"

#include "syzlab/error.hpp"

namespace syzlab {

ScalarBounds compute_bounds(long g, long m, long beta, long dim_V, long p) {
    if (g < 1 || m < 1 || beta < 1 || p < 0 || dim_V < 0) throw PreconditionError("bound parameters out of range");
    ScalarBounds b;
    b.delta_p = (beta - 1) * g - (m - 1) * beta * p;
    b.theorem = beta * beta * m * p + b.delta_p;
    b.corollary = p * g * g * g;
    b.derksen = (p + 1) * g;
    b.lemma2_ceiling = (beta - 1) * dim_V + beta * p;
    return b;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::NotCertified: return "not certified";
    }
    return "?";
}

namespace {

std::string describe(const BoundReport& r) {
    std::string s = "g=" + std::to_string(r.g) + " m=" + std::to_string(r.m) + " beta=" + std::to_string(r.beta.value) +
                    " dimV=" + std::to_string(r.dim_V) + " p=" + std::to_string(r.p);
    return s;
}

void proven(const char* name, const std::optional<int>& value, long limit, const BoundReport& r, Verdict& out) {
    if (!value) {
        out = Verdict::Vacuous;
        return;
    }
    if (*value > limit)
        throw InternalInconsistency(std::string("proven bound violated — implementation bug (") + name + ": " +
                                    std::to_string(*value) + " > " + std::to_string(limit) + ", " + describe(r) + ")");
    out = Verdict::Satisfied;
}

}  // namespace

void judge(BoundReport& r) {
    const auto& audited = r.mode == GeneratorMode::Minimal ? r.s_p.value : r.s_prime_p.value;
    proven("corollary", audited, r.bounds.corollary, r, r.corollary);
    proven("ceiling (beta-1) dim V + beta p", r.s_prime_p.value, r.bounds.lemma2_ceiling, r, r.lemma2);
    if (r.beta.exact) {
        proven("theorem", audited, r.bounds.theorem, r, r.theorem);
    } else {
        // delta_p is not monotone in beta, so the fallback beta = g certifies nothing
        r.theorem = audited ? Verdict::NotCertified : Verdict::Vacuous;
    }
    if (!r.s_p.value) {
        r.derksen = Verdict::Vacuous;
    } else if (*r.s_p.value <= r.bounds.derksen) {
        r.derksen = Verdict::Satisfied;
    } else {
        r.derksen = Verdict::Violated;
        r.findings.push_back({"derksen", r.p, *r.s_p.value, r.bounds.derksen,
                              "s_p exceeds (p+1)g: " + describe(r)});
    }
}

std::vector<BoundReport> audit(const Representation& rep, const IrrepCatalog& catalog, const NoetherResult& beta,
                               int p_min, int p_max, GeneratorMode mode, const RunOptions& options) {
    if (p_min < 1 || p_max < p_min) throw PreconditionError("audit needs 1 <= p_min <= p_max");
    const auto degrees = catalog.degrees();
    long g = 0;
    for (int d : degrees) g += static_cast<long>(d) * d;
    if (g != static_cast<long>(rep.group().order())) throw PreconditionError("catalog does not match the group");

    auto minimal = make_run(rep, GeneratorMode::Minimal, beta, p_max, options);
    auto full = make_run(rep, GeneratorMode::Full, beta, p_max, options);
    std::vector<BoundReport> out;
    for (int p = p_min; p <= p_max; ++p) {
        BoundReport r;
        r.g = g;
        r.n = static_cast<long>(catalog.size());
        r.m = catalog.m();
        r.d_list = degrees;
        r.beta_V = minimal->E.beta_V;
        r.beta = beta;
        r.p = p;
        r.dim_V = rep.degree();
        r.mode = mode;
        r.bounds = compute_bounds(g, r.m, beta.value, static_cast<long>(r.dim_V), p);
        r.s_p = syzygy_degree(*minimal->complex, p, minimal->params);
        r.s_prime_p = syzygy_degree(*full->complex, p, full->params);
        if (r.s_p.value && (!r.s_prime_p.value || *r.s_p.value > *r.s_prime_p.value))
            throw InternalInconsistency("s_p(minimal E) exceeds s_p(full E)");
        judge(r);
        out.push_back(std::move(r));
    }
    return out;
}

ChainCheckResult inequality_chain_check(int g_max, int p_max) {
    ChainCheckResult out;
    auto fail = [&](const std::string& what, long beta, long m, long g, long p) {
        out.pass = false;
        if (out.failures.size() < 20)
            out.failures.push_back(what + " at beta=" + std::to_string(beta) + " m=" + std::to_string(m) +
                                   " g=" + std::to_string(g) + " p=" + std::to_string(p));
    };
    for (long g = 1; g <= g_max; ++g)
        for (long beta = 1; beta <= g; ++beta)
            for (long m = 1; m <= g; ++m)
                for (long p = 1; p <= p_max; ++p) {
                    ++out.tuples;
                    const long dim_W = beta * m * p + g;
                    const auto b = compute_bounds(g, m, beta, dim_W, p);
                    const long lhs = (beta - 1) * dim_W + beta * p;
                    if (lhs != b.theorem) fail("identity", beta, m, g, p);
                    if (b.lemma2_ceiling != b.theorem) fail("ceiling of W_p", beta, m, g, p);
                    const long middle = (g - 1) * (g * g * p + g) + g * p;
                    if (lhs > middle) fail("monotone step", beta, m, g, p);
                    if (middle != p * g * g * g - g * (p * g + 1 - p - g)) fail("rewriting", beta, m, g, p);
                    if (p + g > p * g + 1) fail("p+g <= pg+1", beta, m, g, p);
                    if (middle > b.corollary) fail("final step", beta, m, g, p);
                    if (b.theorem > b.corollary) fail("theorem <= corollary", beta, m, g, p);
                }
    return out;
}

MBoundResult m_bound_check(long n, long g, long m) {
    MBoundResult r;
    r.lhs = m * m;
    r.rhs = n * g;
    r.pass = r.lhs <= r.rhs;
    return r;
}

}  // namespace syzlab
