#include "metdim/johnson.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace metdim {

JohnsonParams normalize_johnson(int n, int k) {
    if (k < 1)
        throw std::invalid_argument("johnson: k must be at least 1");
    if (n <= k)
        throw std::invalid_argument("johnson: need n > k, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    if (n > 64)
        throw std::invalid_argument("johnson: ground sizes above 64 are not supported");
    JohnsonParams p{n, k, false};
    if (k > n - k) {
        p.k = n - k;
        p.remapped = true;
    }
    return p;
}

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int subset_distance(const KSubset& a, const KSubset& b) {
    if (a.n != b.n || a.k != b.k)
        throw std::invalid_argument("subset_distance: mismatched (n,k)");
    return a.k - intersection_size(a, b);
}

std::int64_t colex_rank(const KSubset& s) {
    std::int64_t r = 0;
    int i = 1;
    for (int e : s.elements()) r += binom(e - 1, i++);
    return r;
}

KSubset subset_at_rank(int n, int k, std::int64_t rank) {
    if (rank < 0 || rank >= binom(n, k))
        throw std::invalid_argument("subset_at_rank: rank out of range");
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int e = i; // smallest element with binom(e-1, i) <= rank
        while (binom(e, i) <= rank) ++e;
        rank -= binom(e - 1, i);
        mask |= std::uint64_t{1} << (e - 1);
    }
    return KSubset::from_mask(mask, n);
}

Graph johnson_graph(int n, int k) {
    auto p = normalize_johnson(n, k);
    n = p.n;
    k = p.k;

    std::int64_t nv = binom(n, k);
    std::vector<KSubset> labels;
    labels.reserve(nv);
    // Enumerate masks of popcount k in increasing numeric order (colex).
    std::uint64_t m = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    for (std::int64_t i = 0; i < nv; ++i) {
        labels.push_back(KSubset::from_mask(m, n));
        if (i + 1 < nv) { // Gosper's hack
            std::uint64_t lo = m & -m;
            std::uint64_t up = m + lo;
            m = up | (((m ^ up) >> 2) / lo);
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(nv) * k * (n - k) / 2);
    for (int i = 0; i < int(nv); ++i)
        for (int j = i + 1; j < int(nv); ++j)
            if (intersection_size(labels[i], labels[j]) == k - 1) edges.emplace_back(i, j);

    return build_graph(int(nv), std::move(edges), std::move(labels));
}

namespace {

void check_triple(int n, int x, int y, int z) {
    if (n < 3)
        throw std::invalid_argument("triple construction needs n >= 3");
    for (int e : {x, y, z})
        if (e < 1 || e > n)
            throw std::invalid_argument("triple element " + std::to_string(e) + " outside 1.." +
                                        std::to_string(n));
    if (x == y || x == z || y == z)
        throw std::invalid_argument("x, y, z must be mutually distinct");
}

// Masks of all {p,z}∪T with T ⊆ [n]\{x,y,z}, |T| = k-2, for p in {x,y}.
std::vector<std::uint64_t> punctured_masks(int n, int k, int x, int y, int z) {
    std::uint64_t avoid = (std::uint64_t{1} << (x - 1)) | (std::uint64_t{1} << (y - 1)) |
                          (std::uint64_t{1} << (z - 1));
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
        if (!((avoid >> (e - 1)) & 1)) rest.push_back(e);

    std::vector<std::uint64_t> out;
    std::vector<int> pick(k - 2);
    // enumerate T by index combination over rest
    auto emit = [&](std::uint64_t tmask) {
        out.push_back(tmask | (std::uint64_t{1} << (x - 1)) | (std::uint64_t{1} << (z - 1)));
        out.push_back(tmask | (std::uint64_t{1} << (y - 1)) | (std::uint64_t{1} << (z - 1)));
    };
    if (k == 2) {
        emit(0);
        return out;
    }
    int t = k - 2;
    if (int(rest.size()) < t) return out; // no valid T
    for (int i = 0; i < t; ++i) pick[i] = i;
    while (true) {
        std::uint64_t tm = 0;
        for (int i = 0; i < t; ++i) tm |= std::uint64_t{1} << (rest[pick[i]] - 1);
        emit(tm);
        int i = t - 1;
        while (i >= 0 && pick[i] == int(rest.size()) - t + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

std::vector<int> sprime(int n, int k, int x, int y, int z) {
    if (k < 2)
        throw std::invalid_argument("sprime: defined for k >= 2 only");
    check_triple(n, x, y, z);

    auto removed = punctured_masks(n, k, x, y, z);
    std::sort(removed.begin(), removed.end());

    std::vector<int> out;
    std::int64_t nv = binom(n, k);
    out.reserve(nv - std::int64_t(removed.size()));
    for (std::int64_t r = 0; r < nv; ++r) {
        auto s = subset_at_rank(n, k, r);
        if (!std::binary_search(removed.begin(), removed.end(), s.mask)) out.push_back(int(r));
    }
    return out;
}

Lemma1Witness lemma1_witness(int n, int k, int x, int y, int z, std::span<const int> t_star) {
    if (k < 2)
        throw std::invalid_argument("lemma1_witness: defined for k >= 2 only");
    check_triple(n, x, y, z);
    if (int(t_star.size()) != k - 2)
        throw std::invalid_argument("lemma1_witness: |T*| must be k-2");

    std::uint64_t tm = 0;
    for (int e : t_star) {
        if (e == x || e == y || e == z)
            throw std::invalid_argument("lemma1_witness: T* must avoid {x,y,z}");
        if (e < 1 || e > n)
            throw std::invalid_argument("lemma1_witness: T* element outside 1..n");
        if ((tm >> (e - 1)) & 1)
            throw std::invalid_argument("lemma1_witness: duplicate element in T*");
        tm |= std::uint64_t{1} << (e - 1);
    }

    auto bit = [](int e) { return std::uint64_t{1} << (e - 1); };
    Lemma1Witness w;
    w.a = KSubset::from_mask(tm | bit(x) | bit(y), n);
    w.b = KSubset::from_mask(tm | bit(x) | bit(z), n);
    w.c = KSubset::from_mask(tm | bit(y) | bit(z), n);
    int ia = int(colex_rank(w.a)), ib = int(colex_rank(w.b)), ic = int(colex_rank(w.c));
    w.e1 = {std::min(ia, ib), std::max(ia, ib)};
    w.e2 = {std::min(ia, ic), std::max(ia, ic)};
    return w;
}

std::vector<int> theorem2_set(int n) {
    if (n < 5)
        throw std::invalid_argument("theorem2_set: stated for n >= 5");
    int m = n / 2;
    std::vector<std::int64_t> removed;
    removed.reserve(m);
    for (int i = 1; i <= m; ++i)
        removed.push_back(colex_rank(KSubset::of({2 * i - 1, 2 * i}, n)));
    std::sort(removed.begin(), removed.end());

    std::vector<int> out;
    std::int64_t nv = binom(n, 2);
    out.reserve(nv - m);
    for (std::int64_t r = 0; r < nv; ++r)
        if (!std::binary_search(removed.begin(), removed.end(), r)) out.push_back(int(r));
    return out;
}

std::int64_t theorem2_value(int n) {
    if (n < 5)
        throw std::invalid_argument("theorem2_value: stated for n >= 5");
    return binom(n, 2) - n / 2;
}

} // namespace metdim
