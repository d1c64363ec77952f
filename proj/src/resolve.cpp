#include "metdim/resolve.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace metdim {

const char* to_string(ResolveKind k) {
    switch (k) {
        case ResolveKind::vertex: return "vertex";
        case ResolveKind::edge: return "edge";
        case ResolveKind::mixed: return "mixed";
    }
    return "?";
}

ResolveKind resolve_kind_from_string(const std::string& s) {
    if (s == "vertex") return ResolveKind::vertex;
    if (s == "edge") return ResolveKind::edge;
    if (s == "mixed") return ResolveKind::mixed;
    throw std::invalid_argument("unknown kind '" + s + "' (expected vertex|edge|mixed)");
}

std::string Item::to_string() const {
    if (is_vertex()) return "v" + std::to_string(u);
    return "e(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<Item> item_list(const Graph& g, ResolveKind kind) {
    std::vector<Item> items;
    if (kind != ResolveKind::edge) {
        items.reserve(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v) items.push_back(Item::vertex(v));
    }
    if (kind != ResolveKind::vertex)
        for (auto [u, v] : g.edges) items.push_back(Item::edge(u, v));
    return items;
}

std::vector<std::uint16_t> coordinate_vector(const Item& a, std::span<const int> landmarks,
                                             const DistanceMatrix& dist) {
    if (landmarks.empty())
        throw std::invalid_argument("coordinate_vector: landmark set must be non-empty");
    std::vector<std::uint16_t> out;
    out.reserve(landmarks.size());
    for (int w : landmarks) out.push_back(std::uint16_t(item_distance(a, w, dist)));
    return out;
}

namespace {

std::uint64_t fnv1a(const std::uint16_t* p, std::size_t n) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

ResolveVerdict is_resolving(std::span<const int> landmarks, ResolveKind kind, const Graph& g,
                            const DistanceMatrix& dist) {
    auto items = item_list(g, kind);
    ResolveVerdict verdict;

    if (landmarks.empty()) {
        verdict.resolving = items.size() <= 1;
        if (!verdict.resolving) verdict.witness = {items[0], items[1]};
        return verdict;
    }

    const std::size_t m = landmarks.size();
    std::vector<std::uint16_t> coords(items.size() * m);
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            coords[i * m + j] = std::uint16_t(item_distance(items[i], landmarks[j], dist));

    auto equal_vec = [&](std::size_t i, std::size_t j) {
        return std::equal(&coords[i * m], &coords[i * m] + m, &coords[j * m]);
    };

    // Bucket by hash, confirm exactly; the lexicographically first colliding
    // pair (canonical item order) is the reported witness.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    buckets.reserve(items.size() * 2);
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& bucket = buckets[fnv1a(&coords[i * m], m)];
        for (auto j : bucket)
            if (equal_vec(j, i)) {
                if (!best || std::pair(j, std::uint32_t(i)) < *best)
                    best = {j, std::uint32_t(i)};
                break; // earlier duplicate of the same vector already recorded
            }
        bucket.push_back(std::uint32_t(i));
    }

    if (!best) {
        verdict.resolving = true;
        return verdict;
    }
    verdict.witness = {items[best->first], items[best->second]};
    verdict.shared_coordinates.assign(&coords[best->first * m], &coords[best->first * m] + m);
    return verdict;
}

ZeResult ze(const Item& a, std::span<const int> landmarks, const DistanceMatrix& dist) {
    ZeResult r;
    for (int w : landmarks)
        if (item_distance(a, w, dist) == 0) r.members.push_back(w);
    r.count = int(r.members.size());
    return r;
}

EqualizerVerdict is_distance_equalizer(std::span<const int> landmarks, const Graph& g,
                                       const DistanceMatrix& dist) {
    std::vector<char> in_s(g.vertex_count, 0);
    for (int w : landmarks) in_s[w] = 1;
    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!in_s[v]) outside.push_back(v);

    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            int x = outside[i], y = outside[j];
            bool hit = false;
            for (int w : landmarks)
                if (dist(x, w) == dist(y, w)) {
                    hit = true;
                    break;
                }
            if (!hit) return {false, std::pair{x, y}};
        }
    return {true, std::nullopt};
}

} // namespace metdim
