#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crosscut/errors.hpp"
#include "crosscut/matching.hpp"

using namespace crosscut;

namespace {

// Factorial enumeration of perfect matchings; the trusted oracle.
BigInt best_matching_weight(int n, const std::vector<BigInt>& w) {
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    BigInt best;
    bool first = true;
    std::function<void(std::vector<int>&, BigInt)> go = [&](std::vector<int>& rest,
                                                            BigInt acc) {
        if (rest.empty()) {
            if (first || acc < best) {
                best = acc;
                first = false;
            }
            return;
        }
        int a = rest[0];
        for (std::size_t i = 1; i < rest.size(); ++i) {
            int b = rest[i];
            std::vector<int> next;
            for (std::size_t j = 1; j < rest.size(); ++j)
                if (j != i) next.push_back(rest[j]);
            go(next, acc + w[pair_index(n, a, b)]);
        }
    };
    go(nodes, BigInt(0));
    return best;
}

std::vector<BigInt> random_weights(std::mt19937_64& rng, int n, int lo, int hi) {
    std::vector<BigInt> w(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (auto& x : w)
        x = BigInt(lo + static_cast<long long>(rng() % (hi - lo + 1)));
    return w;
}

void check_perfect(int n, const std::vector<int>& mate) {
    REQUIRE(static_cast<int>(mate.size()) == n);
    for (int v = 0; v < n; ++v) {
        CHECK(mate[v] != v);
        CHECK(mate[v] >= 0);
        CHECK(mate[mate[v]] == v);
    }
}

}  // namespace

TEST_CASE("two nodes match on the single edge") {
    auto mate = min_weight_perfect_matching(2, {BigInt(7)});
    check_perfect(2, mate);
    CHECK(mate[0] == 1);
}

TEST_CASE("four nodes pick the strictly best of three matchings") {
    // pairs: 01,02,03,12,13,23 -> matchings {01,23}, {02,13}, {03,12}
    std::vector<BigInt> w = {BigInt(5), BigInt(2), BigInt(9),
                             BigInt(9), BigInt(1), BigInt(5)};
    auto mate = min_weight_perfect_matching(4, w);
    check_perfect(4, mate);
    CHECK(matching_weight(4, w, mate).to_int64() == 3);  // {02,13}
    CHECK(mate[0] == 2);
    CHECK(mate[1] == 3);
}

TEST_CASE("odd node count is rejected") {
    CHECK_THROWS_AS(min_weight_perfect_matching(3, {BigInt(1), BigInt(1), BigInt(1)}),
                    PreconditionError);
}

TEST_CASE("matcher equals factorial oracle on random instances") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 400; ++t) {
        int n = 2 * (1 + int(rng() % 4));  // 2..8
        auto w = random_weights(rng, n, 0, 30);
        auto mate = min_weight_perfect_matching(n, w);
        check_perfect(n, mate);
        CHECK(matching_weight(n, w, mate) == best_matching_weight(n, w));
    }
}

TEST_CASE("matcher handles 10 nodes and negatives") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 60; ++t) {
        auto w = random_weights(rng, 10, -20, 20);
        auto mate = min_weight_perfect_matching(10, w);
        check_perfect(10, mate);
        CHECK(matching_weight(10, w, mate) == best_matching_weight(10, w));
    }
}

TEST_CASE("matcher survives clustered equal weights") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 200; ++t) {
        int n = 2 * (2 + int(rng() % 3));  // 4..8
        auto w = random_weights(rng, n, 0, 2);
        auto mate = min_weight_perfect_matching(n, w);
        check_perfect(n, mate);
        CHECK(matching_weight(n, w, mate) == best_matching_weight(n, w));
    }
}

TEST_CASE("matcher stays exact beyond int64") {
    BigInt huge = BigInt::pow10(22);
    std::mt19937_64 rng(404);
    for (int t = 0; t < 25; ++t) {
        int n = 6;
        auto w = random_weights(rng, n, 0, 40);
        std::vector<BigInt> scaled(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = w[i] * huge + w[i];
        auto mate = min_weight_perfect_matching(n, scaled);
        check_perfect(n, mate);
        CHECK(matching_weight(n, scaled, mate) ==
              best_matching_weight(n, scaled));
    }
}

TEST_CASE("larger random instances match a DP oracle") {
    // Held-Karp style subset DP as an independent check for n = 12
    std::mt19937_64 rng(505);
    for (int t = 0; t < 8; ++t) {
        const int n = 12;
        auto w = random_weights(rng, n, 0, 50);
        std::vector<BigInt> dp(1 << n);
        std::vector<char> ok(1 << n, 0);
        ok[0] = 1;
        for (int mask = 1; mask < (1 << n); ++mask) {
            int a = 0;
            while (!(mask & (1 << a))) ++a;
            for (int b = a + 1; b < n; ++b) {
                if (!(mask & (1 << b))) continue;
                int rest = mask ^ (1 << a) ^ (1 << b);
                if (!ok[rest]) continue;
                BigInt cand = dp[rest] + w[pair_index(n, a, b)];
                if (!ok[mask] || cand < dp[mask]) {
                    dp[mask] = cand;
                    ok[mask] = 1;
                }
            }
        }
        auto mate = min_weight_perfect_matching(n, w);
        check_perfect(n, mate);
        CHECK(matching_weight(n, w, mate) == dp[(1 << n) - 1]);
    }
}
