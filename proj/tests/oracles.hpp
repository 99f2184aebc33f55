#pragma once
// Test-only brute-force oracles. Nothing here calls into the library's
// series or enumeration code.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// Integer polynomial product, truncated at degree n.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::size_t n) {
    std::vector<std::int64_t> out(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// prod_{i=1}^{k} (1 - q^i) expanded naively to degree n.
inline std::vector<std::int64_t> pochhammer(int k, std::size_t n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= k; ++i) {
        std::vector<std::int64_t> f(static_cast<std::size_t>(i) + 1, 0);
        f[0] = 1;
        f[static_cast<std::size_t>(i)] = -1;
        p = poly_mul(p, f, n);
    }
    return p;
}

// counts[c][w] = number of multisets of parts from {1, 3, 5, ...} (half units)
// with c parts and total w half units, w <= max_halves. With distinct=true,
// parts may not repeat (fermionic occupation).
inline std::vector<std::vector<std::int64_t>> odd_part_counts(int max_halves, bool distinct) {
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(max_halves) + 1,
                                                  std::vector<std::int64_t>(static_cast<std::size_t>(max_halves) + 1, 0));
    std::function<void(int, int, int)> rec = [&](int smallest, int parts, int total) {
        counts[static_cast<std::size_t>(parts)][static_cast<std::size_t>(total)] += 1;
        for (int p = smallest; total + p <= max_halves; p += 2) rec(distinct ? p + 2 : p, parts + 1, total + p);
    };
    rec(1, 0, 0);
    return counts;
}

// Number of charge-zero states of weight m (integer) built from one species of
// +/- modes: pairs (plus-multiset, minus-multiset) of equal size.
inline std::vector<std::int64_t> balanced_counts(int max_weight, bool distinct) {
    const int H = 2 * max_weight;
    auto c = odd_part_counts(H, distinct);
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_weight) + 1, 0);
    for (int parts = 0; parts <= H; ++parts)
        for (int a = 0; a <= H; ++a)
            for (int b = 0; a + b <= H; ++b)
                if ((a + b) % 2 == 0)
                    out[static_cast<std::size_t>((a + b) / 2)] +=
                        c[static_cast<std::size_t>(parts)][static_cast<std::size_t>(a)] *
                        c[static_cast<std::size_t>(parts)][static_cast<std::size_t>(b)];
    return out;
}

// sector[charge + H][w]: states of one +/- pair of species (distinct or not)
// with given charge and weight w half units.
inline std::vector<std::vector<std::int64_t>> charged_sector(int H, bool distinct) {
    auto c = odd_part_counts(H, distinct);
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(2 * H + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(H) + 1, 0));
    for (int p = 0; p <= H; ++p)
        for (int m = 0; m <= H; ++m)
            for (int a = 0; a <= H; ++a)
                for (int b = 0; a + b <= H; ++b)
                    out[static_cast<std::size_t>(p - m + H)][static_cast<std::size_t>(a + b)] +=
                        c[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)] *
                        c[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
    return out;
}

// Weight-graded count of states in F (x) M (one species) with total charge
// l_F + l_M = 0.
inline std::vector<std::int64_t> v_counts(int max_weight) {
    const int H = 2 * max_weight;
    auto f = charged_sector(H, true);
    auto b = charged_sector(H, false);
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_weight) + 1, 0);
    for (int q = -H; q <= H; ++q)
        for (int w1 = 0; w1 <= H; ++w1)
            for (int w2 = 0; w1 + w2 <= H; ++w2)
                if ((w1 + w2) % 2 == 0)
                    out[static_cast<std::size_t>((w1 + w2) / 2)] +=
                        f[static_cast<std::size_t>(q + H)][static_cast<std::size_t>(w1)] *
                        b[static_cast<std::size_t>(-q + H)][static_cast<std::size_t>(w2)];
    return out;
}

}  // namespace oracle
