#include <gmpxx.h>

#include <map>
#include <numeric>

#include "oracles.hpp"

namespace oracle {

namespace {

struct Filler {
    std::vector<int> shape;
    std::vector<int> remaining;
    std::vector<std::vector<int>> grid;
    long count = 0;

    void fill(std::size_t row, int col) {
        if (row == shape.size()) {
            ++count;
            return;
        }
        if (col == shape[row]) {
            fill(row + 1, 0);
            return;
        }
        const int left = col > 0 ? grid[row][col - 1] : 0;
        const int above = row > 0 ? grid[row - 1][col] : -1;
        for (int v = std::max(left, above + 1); v < static_cast<int>(remaining.size()); ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            grid[row][col] = v;
            fill(row, col + 1);
            ++remaining[v];
        }
    }
};

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, out);
        cur.pop_back();
    }
}

void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(total, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions(total - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

long count_ssyt(const std::vector<int>& shape, const std::vector<int>& content) {
    const int a = std::accumulate(shape.begin(), shape.end(), 0);
    const int b = std::accumulate(content.begin(), content.end(), 0);
    if (a != b) return 0;
    Filler f;
    f.shape = shape;
    f.remaining = content;
    for (int len : shape) f.grid.emplace_back(static_cast<std::size_t>(len), 0);
    f.fill(0, 0);
    return f.count;
}

long lr_by_kostka(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu) {
    const int sm = std::accumulate(mu.begin(), mu.end(), 0);
    const int sn = std::accumulate(nu.begin(), nu.end(), 0);
    const int sl = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (sl != sm + sn) return 0;
    const std::size_t N = static_cast<std::size_t>(std::max(sl, 1));
    auto pad = [&](std::vector<int> v) {
        v.resize(N, 0);
        return v;
    };
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    auto kostka = [&](const std::vector<int>& shape, const std::vector<int>& content) {
        auto key = std::make_pair(shape, content);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo[key] = count_ssyt(shape, content);
    };
    // coefficient of x^kappa in s_mu s_nu, for each partition kappa
    std::vector<std::vector<int>> kappas;
    std::vector<int> cur;
    partitions(sl, sl, cur, kappas);  // reverse lex: dominance-maximal first
    std::vector<std::vector<int>> alphas;
    compositions(sm, N, cur, alphas);
    std::map<std::vector<int>, long> coeff;
    for (const auto& k : kappas) {
        const auto kp = pad(k);
        long c = 0;
        for (const auto& a : alphas) {
            std::vector<int> b(N);
            bool ok = true;
            for (std::size_t i = 0; i < N; ++i) {
                b[i] = kp[i] - a[i];
                if (b[i] < 0) ok = false;
            }
            if (!ok) continue;
            c += kostka(mu, a) * kostka(nu, b);
        }
        coeff[k] = c;
    }
    // peel: coeff(kappa) = sum_rho c^rho K_{rho kappa}
    std::map<std::vector<int>, long> lr;
    for (const auto& k : kappas) {
        long rest = coeff[k];
        for (const auto& [rho, c] : lr) rest -= c * kostka(rho, pad(k));
        lr[k] = rest;
    }
    return lr[lambda];
}

}  // namespace oracle
