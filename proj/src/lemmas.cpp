#include "cyclepack/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclepack {

namespace {

void require_members(const VertexSet& s, const std::set<VertexId>& universe, const char* name) {
    for (VertexId v : s)
        if (!universe.count(v))
            throw std::invalid_argument(std::string(name) + " contains vertex " +
                                        std::to_string(v) + " outside the cycle vertices");
}

std::set<VertexId> family_vertices(const CycleFamily& f) {
    std::set<VertexId> all;
    for (const Cycle& c : f.cycles) all.insert(c.begin(), c.end());
    return all;
}

struct ArcKey {
    std::size_t cycle_index;
    VertexId front;
    std::size_t length;
    auto operator<=>(const ArcKey&) const = default;
};

// Trims the window of cyclic positions [begin, begin+count) of c down to its
// maximal sub-arc with both ends in T. Returns the arc or nullopt.
std::optional<std::vector<VertexId>> trim_to_set(const Cycle& c, std::size_t begin,
                                                 std::size_t count, const VertexSet& T,
                                                 std::size_t min_len) {
    std::size_t n = c.size();
    std::optional<std::size_t> first, last;
    for (std::size_t j = 0; j < count; ++j) {
        if (T.count(c[(begin + j) % n])) {
            if (!first) first = j;
            last = j;
        }
    }
    if (!first) return std::nullopt;
    std::size_t len = *last - *first + 1;
    if (len < min_len) return std::nullopt;
    std::vector<VertexId> out;
    out.reserve(len);
    for (std::size_t j = *first; j <= *last; ++j) out.push_back(c[(begin + j) % n]);
    return out;
}

std::optional<RerouteWitness> search_spare(const CycleFamily& f, const VertexSet& S,
                                           const VertexSet& T) {
    std::optional<RerouteWitness> best;
    std::optional<ArcKey> best_key;
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle& c = f.cycles[i];
        std::size_t n = c.size();
        std::size_t q = static_cast<std::size_t>(f.path_lengths[i]);
        for (std::size_t s = 0; s < n; ++s) {
            VertexId front = c[s];
            VertexId back = c[(s + q - 1) % n];
            if (!S.count(front) || !S.count(back)) continue;
            std::optional<VertexId> spare;
            for (std::size_t j = q; j < n; ++j) {
                VertexId v = c[(s + j) % n];
                if (T.count(v) && (!spare || v < *spare)) spare = v;
            }
            if (!spare) continue;
            ArcKey key{i, front, q};
            if (best_key && key >= *best_key) continue;
            RerouteWitness w;
            w.cycle_index = i;
            for (std::size_t j = 0; j < q; ++j) w.path.push_back(c[(s + j) % n]);
            w.spare = spare;
            best = std::move(w);
            best_key = key;
        }
    }
    return best;
}

}  // namespace

void validate_family(const CycleFamily& f) {
    if (f.cycles.size() != f.path_lengths.size())
        throw std::invalid_argument("cycle family: one path length per cycle required");
    std::set<VertexId> seen;
    for (const Cycle& c : f.cycles) {
        if (c.size() < 3)
            throw std::invalid_argument("cycle family: cycles must have at least 3 vertices");
        for (VertexId v : c)
            if (!seen.insert(v).second)
                throw std::invalid_argument("cycle family: vertex " + std::to_string(v) +
                                            " appears twice");
    }
}

std::optional<RerouteWitness> find_path_with_spare(const CycleFamily& f, const VertexSet& S,
                                                   const VertexSet& T) {
    validate_family(f);
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        int q = f.path_lengths[i];
        int n = static_cast<int>(f.cycles[i].size());
        if (q < 1 || q > n - 1)
            throw std::invalid_argument("find_path_with_spare: path length must lie in 1..|F_i|-1");
    }
    auto universe = family_vertices(f);
    require_members(S, universe, "S");
    require_members(T, universe, "T");
    return search_spare(f, S, T);
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> find_disjoint_st_paths(
    const Cycle& c, const VertexSet& S, const VertexSet& T) {
    std::size_t n = c.size();
    if (n < 6)
        throw std::invalid_argument("find_disjoint_st_paths: cycle must have at least 6 vertices");
    std::set<VertexId> universe(c.begin(), c.end());
    require_members(S, universe, "S");
    require_members(T, universe, "T");

    std::size_t p = n / 3;
    std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> best;
    std::optional<ArcKey> best_key;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t len = p + 1; len + p + 1 <= n; ++len) {
            VertexId front = c[s];
            VertexId back = c[(s + len - 1) % n];
            if (!S.count(front) || !S.count(back)) continue;
            ArcKey key{0, front, len};
            if (best_key && key >= *best_key) continue;
            auto q = trim_to_set(c, s + len, n - len, T, p + 1);
            if (!q) continue;
            std::vector<VertexId> path;
            for (std::size_t j = 0; j < len; ++j) path.push_back(c[(s + j) % n]);
            best = {std::move(path), std::move(*q)};
            best_key = key;
        }
    }
    return best;
}

std::optional<RerouteWitness> find_reroute_or_double(const CycleFamily& f, const VertexSet& S,
                                                     const VertexSet& T) {
    validate_family(f);
    if (f.cycles.size() < 5)
        throw std::invalid_argument("find_reroute_or_double: at least 5 cycles required");
    std::size_t r = f.cycles[0].size();
    for (const Cycle& c : f.cycles)
        if (c.size() != r)
            throw std::invalid_argument("find_reroute_or_double: cycles must share one order");
    if (r < 4) throw std::invalid_argument("find_reroute_or_double: order must be at least 4");
    for (int q : f.path_lengths)
        if (q < 1 || 3 * static_cast<std::size_t>(q) >= r)
            throw std::invalid_argument(
                "find_reroute_or_double: path lengths must lie in 1..ceil(r/3)-1");
    auto universe = family_vertices(f);
    require_members(S, universe, "S");
    require_members(T, universe, "T");

    if (auto w = search_spare(f, S, T)) return w;

    std::size_t min_len = r / 3 + 1;  // smallest len with 3*len > r
    std::optional<RerouteWitness> best;
    std::optional<ArcKey> best_key;
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Cycle& c = f.cycles[i];
        for (std::size_t s = 0; s < r; ++s) {
            for (std::size_t len = min_len; len + min_len <= r; ++len) {
                VertexId front = c[s];
                VertexId back = c[(s + len - 1) % r];
                if (!S.count(front) || !S.count(back)) continue;
                ArcKey key{i, front, len};
                if (best_key && key >= *best_key) continue;
                auto q = trim_to_set(c, s + len, r - len, T, min_len);
                if (!q) continue;
                RerouteWitness w;
                w.cycle_index = i;
                for (std::size_t j = 0; j < len; ++j) w.path.push_back(c[(s + j) % r]);
                w.second_path = std::move(*q);
                best = std::move(w);
                best_key = key;
            }
        }
    }
    return best;
}

std::optional<std::vector<VertexId>> find_short_crossing_path(const Cycle& c, const VertexSet& S,
                                                              const VertexSet& T) {
    std::size_t n = c.size();
    std::set<VertexId> universe(c.begin(), c.end());
    require_members(S, universe, "S");
    require_members(T, universe, "T");

    std::size_t max_len = std::min(n, (n + 24) / 6);  // len <= n/6 + 4 in exact arithmetic
    std::optional<std::vector<VertexId>> best;
    std::optional<ArcKey> best_key;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t len = 2; len <= max_len; ++len) {
            VertexId front = c[s];
            VertexId back = c[(s + len - 1) % n];
            bool forward = S.count(front) && T.count(back);
            bool reversed = T.count(front) && S.count(back);
            if (!forward && !reversed) continue;
            std::vector<VertexId> path;
            for (std::size_t j = 0; j < len; ++j) path.push_back(c[(s + j) % n]);
            if (!forward) std::reverse(path.begin(), path.end());
            ArcKey key{0, path.front(), len};
            if (best_key && key >= *best_key) continue;
            best = std::move(path);
            best_key = key;
        }
    }
    return best;
}

bool is_arc_of(const Cycle& c, const std::vector<VertexId>& path) {
    if (path.empty() || path.size() > c.size()) return false;
    std::set<VertexId> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    std::size_t n = c.size();
    auto it = std::find(c.begin(), c.end(), path[0]);
    if (it == c.end()) return false;
    std::size_t at = static_cast<std::size_t>(it - c.begin());
    bool fwd = true;
    for (std::size_t j = 0; j < path.size() && fwd; ++j)
        if (c[(at + j) % n] != path[j]) fwd = false;
    if (fwd) return true;
    bool bwd = true;
    for (std::size_t j = 0; j < path.size() && bwd; ++j)
        if (c[(at + n - j) % n] != path[j]) bwd = false;
    return bwd;
}

bool check_spare_witness(const CycleFamily& f, const VertexSet& S, const VertexSet& T,
                         const RerouteWitness& w) {
    if (w.cycle_index >= f.cycles.size()) return false;
    if (w.second_path || !w.spare) return false;
    const Cycle& c = f.cycles[w.cycle_index];
    if (w.path.size() != static_cast<std::size_t>(f.path_lengths[w.cycle_index])) return false;
    if (!is_arc_of(c, w.path)) return false;
    if (!S.count(w.path.front()) || !S.count(w.path.back())) return false;
    if (!T.count(*w.spare)) return false;
    if (std::find(c.begin(), c.end(), *w.spare) == c.end()) return false;
    if (std::find(w.path.begin(), w.path.end(), *w.spare) != w.path.end()) return false;
    return true;
}

bool check_st_paths(const Cycle& c, const VertexSet& S, const VertexSet& T,
                    const std::vector<VertexId>& p, const std::vector<VertexId>& q,
                    std::size_t min_len) {
    if (p.size() < min_len || q.size() < min_len) return false;
    if (!is_arc_of(c, p) || !is_arc_of(c, q)) return false;
    if (!S.count(p.front()) || !S.count(p.back())) return false;
    if (!T.count(q.front()) || !T.count(q.back())) return false;
    std::set<VertexId> pv(p.begin(), p.end());
    for (VertexId v : q)
        if (pv.count(v)) return false;
    return true;
}

bool check_double_witness(const CycleFamily& f, const VertexSet& S, const VertexSet& T,
                          const RerouteWitness& w) {
    if (w.cycle_index >= f.cycles.size()) return false;
    const Cycle& c = f.cycles[w.cycle_index];
    std::size_t r = c.size();
    if (w.spare && !w.second_path) return check_spare_witness(f, S, T, w);
    if (!w.second_path || w.spare) return false;
    if (3 * w.path.size() <= r || 3 * w.second_path->size() <= r) return false;
    return check_st_paths(c, S, T, w.path, *w.second_path, 1);
}

bool check_crossing_witness(const Cycle& c, const VertexSet& S, const VertexSet& T,
                            const std::vector<VertexId>& path) {
    if (path.size() < 2) return false;
    if (6 * path.size() > c.size() + 24) return false;
    if (!is_arc_of(c, path)) return false;
    return S.count(path.front()) > 0 && T.count(path.back()) > 0;
}

}  // namespace cyclepack
