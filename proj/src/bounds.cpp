#include "metdim/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "metdim/johnson.hpp"

namespace metdim {

namespace {

int ceil_log2(std::int64_t x) {
    // smallest t with 2^t >= x, x >= 1
    int t = 0;
    while ((std::int64_t{1} << t) < x) ++t;
    return t;
}

// Append with hash-based dedup; merges provenance tags, keeps first group id.
struct FamilyBuilder {
    SetFamily fam;
    std::unordered_map<std::uint64_t, std::vector<int>> index;

    explicit FamilyBuilder(int ground) { fam.ground_size = ground; }

    void add(Bitset s, std::string tag, int group_id) {
        auto& bucket = index[s.hash()];
        for (int i : bucket)
            if (fam.sets[i] == s) {
                if (!tag.empty()) fam.provenance[i] += ";" + tag;
                return;
            }
        bucket.push_back(int(fam.sets.size()));
        fam.sets.push_back(std::move(s));
        fam.provenance.push_back(std::move(tag));
        fam.group.push_back(group_id);
    }
};

} // namespace

std::pair<Bitset, Bitset> w_sets(int u, int v, const Graph& g, const DistanceMatrix& dist) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count || !g.adjacent(u, v))
        throw std::invalid_argument("w_sets: (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    Bitset wuv(g.vertex_count), wvu(g.vertex_count);
    for (int w = 0; w < g.vertex_count; ++w) {
        if (dist(u, w) < dist(v, w)) wuv.set(w);
        else if (dist(v, w) < dist(u, w)) wvu.set(w);
    }
    return {wuv, wvu};
}

SetFamily mixed_w_family(const Graph& g, const DistanceMatrix& dist) {
    FamilyBuilder b(g.vertex_count);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        auto [u, v] = g.edges[ei];
        auto [wuv, wvu] = w_sets(u, v, g, dist);
        if (wuv.none() || wvu.none())
            throw std::runtime_error("mixed_w_family: empty W set for an edge");
        std::string e = std::to_string(u) + "-" + std::to_string(v);
        b.add(std::move(wuv), "W[" + e + "]", int(ei));
        b.add(std::move(wvu), "W[" + std::to_string(v) + "-" + std::to_string(u) + "]", int(ei));
    }
    return std::move(b.fam);
}

SetFamily mhsp_family(int n, int k) {
    if (k < 2) throw std::invalid_argument("mhsp_family: defined for k >= 2 only");
    if (n < 3) throw std::invalid_argument("mhsp_family: needs n >= 3");
    auto p = normalize_johnson(n, k);
    n = p.n;
    k = p.k;

    int ground = int(binom(n, k));
    FamilyBuilder b(ground);
    b.fam.element_transitive = true; // the symmetric group on [n] acts on the family
    // Indexed by (unordered {x,y}, z); S' is symmetric in x and y.
    for (int z = 1; z <= n; ++z)
        for (int x = 1; x <= n; ++x) {
            if (x == z) continue;
            for (int y = x + 1; y <= n; ++y) {
                if (y == z) continue;
                Bitset s(ground);
                for (int idx : sprime(n, k, x, y, z)) s.set(idx); // complement below
                Bitset comp(ground);
                for (int i = 0; i < ground; ++i)
                    if (!s.test(i)) comp.set(i);
                b.add(std::move(comp),
                      "xy{" + std::to_string(x) + "," + std::to_string(y) + "}z" +
                          std::to_string(z),
                      z - 1);
            }
        }
    return std::move(b.fam);
}

BoundsReport formula_bounds(const GraphStats& stats) {
    if (stats.diameter <= 0)
        throw std::invalid_argument("formula_bounds: diameter must be positive");

    BoundsReport r;
    r.ed_prop1 = ceil_log2(stats.max_degree);
    r.ed_thm2 = 1 + ceil_log2(stats.min_degree);
    r.mi1 = 1 + ceil_log2(1 + stats.min_degree);
    r.mi1_regular = stats.min_degree == stats.max_degree;

    // Smallest b with |V|+|E| <= Diam^b + b(Delta+1); monotone in b.
    auto target = (unsigned __int128)(stats.vertex_count + stats.edge_count);
    for (int b = 1;; ++b) {
        unsigned __int128 pw = 1;
        for (int i = 0; i < b && pw < target; ++i) pw *= (unsigned)stats.diameter;
        if (pw + (unsigned __int128)b * (stats.max_degree + 1) >= target) {
            r.mi2 = b;
            break;
        }
    }
    return r;
}

JohnsonClosedForms johnson_closed_forms(int n, int k) {
    auto p = normalize_johnson(n, k);
    n = p.n;
    k = p.k;
    JohnsonClosedForms f;
    if (k == 2 && n >= 6) f.beta = (2 * std::int64_t(n) + 2) / 3; // ceil(2n/3)
    if (k >= 3 && n >= 2 * k) f.beta_upper = (std::int64_t(k) * (n + 1)) / (k + 1);
    if (k == 2 && n >= 5) f.eqdim = 3;
    if (k == 2 && n == 4) f.eqdim = 2;
    if (k >= 3 && (k & 1) && n == 2 * k) f.eqdim = binom(2 * k, k) / 2;
    return f;
}

} // namespace metdim
