#include <algorithm>
#include <vector>

#include "oracles.hpp"

namespace oracle {

namespace {

struct Abelian {
    std::vector<int> moduli;
    int order = 1;

    int add(int a, int b) const {
        int out = 0, scale = 1;
        for (int n : moduli) {
            out += ((a % n + b % n) % n) * scale;
            a /= n;
            b /= n;
            scale *= n;
        }
        return out;
    }
};

// longest zero-sum-free sequence extending the current one (elements nondecreasing)
int longest_free(const Abelian& g, int start, std::vector<char>& sums) {
    int best = 0;
    for (int x = std::max(start, 1); x < g.order; ++x) {
        std::vector<char> next = sums;
        next[static_cast<std::size_t>(x)] = 1;
        for (int s = 0; s < g.order; ++s)
            if (sums[static_cast<std::size_t>(s)]) next[static_cast<std::size_t>(g.add(s, x))] = 1;
        if (next[0]) continue;
        best = std::max(best, 1 + longest_free(g, x, next));
    }
    return best;
}

}  // namespace

// A sequence s.x is a minimal zero-sum sequence exactly when s is
// zero-sum free and x = -sum(s), so D(G) = 1 + longest zero-sum-free length.
int davenport_constant(const std::vector<int>& moduli) {
    Abelian g;
    g.moduli = moduli;
    for (int n : moduli) g.order *= n;
    std::vector<char> sums(static_cast<std::size_t>(g.order), 0);
    return 1 + longest_free(g, 1, sums);
}

}  // namespace oracle
