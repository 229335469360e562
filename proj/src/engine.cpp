#include "cyclepack/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cyclepack/lemmas.hpp"

namespace cyclepack {

namespace {

struct View {
    int r = 0;
    std::vector<Cycle> full;   // order-r cycles, canonical order
    std::vector<Cycle> small;  // orders r-1 down to 1, canonical within buckets
    VertexSet full_vertices;
};

View build_view(const CycleCollection& c) {
    View v;
    v.r = c.order_cap();
    for (const Cycle& cyc : c.bucket(v.r)) {
        v.full.push_back(cyc);
        v.full_vertices.insert(cyc.begin(), cyc.end());
    }
    for (int order = v.r - 1; order >= 1; --order)
        for (const Cycle& cyc : c.bucket(order)) v.small.push_back(cyc);
    return v;
}

std::vector<std::pair<VertexId, VertexId>> cycle_edges(const Cycle& c) {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (c.size() == 2) {
        out.emplace_back(c[0], c[1]);
    } else if (c.size() >= 3) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    return out;
}

// Replaces edge (v, w) of c by the path v, segment..., w. The segment must
// already be oriented so its front attaches to v and its back to w.
Cycle splice_edge(const Cycle& c, VertexId v, VertexId w, const std::vector<VertexId>& segment) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        VertexId at = c[i];
        VertexId next = c[(i + 1) % n];
        if (at != v || next != w) continue;
        Cycle out;
        out.insert(out.end(), c.begin(), c.begin() + i + 1);
        out.insert(out.end(), segment.begin(), segment.end());
        out.insert(out.end(), c.begin() + i + 1, c.end());
        return out;
    }
    // The edge may run the other way around; splice the reversed segment.
    for (std::size_t i = 0; i < n; ++i) {
        VertexId at = c[i];
        VertexId next = c[(i + 1) % n];
        if (at != w || next != v) continue;
        Cycle out;
        out.insert(out.end(), c.begin(), c.begin() + i + 1);
        out.insert(out.end(), segment.rbegin(), segment.rend());
        out.insert(out.end(), c.begin() + i + 1, c.end());
        return out;
    }
    throw std::logic_error("splice_edge: edge not on cycle");
}

std::set<VertexId> vertex_union(const std::vector<Cycle>& cycles) {
    std::set<VertexId> out;
    for (const Cycle& c : cycles) out.insert(c.begin(), c.end());
    return out;
}

// Completes an improvement move: any vertex of `removed` missing from `added`
// comes back as a 1-cycle, so the replacement covers exactly the same
// vertices.
Move finish_move(MoveKind kind, std::vector<Cycle> removed, std::vector<Cycle> added) {
    auto gone = vertex_union(removed);
    auto kept = vertex_union(added);
    for (VertexId v : kept)
        if (!gone.count(v)) throw std::logic_error("finish_move: added cycle leaves move scope");
    for (VertexId v : gone)
        if (!kept.count(v)) added.push_back({v});
    Move m;
    m.kind = kind;
    m.removed = std::move(removed);
    m.added = std::move(added);
    return m;
}

Move success_move(MoveKind kind, const View& view, const std::vector<Cycle>& extra,
                  const Cycle* dropped_full = nullptr) {
    Move m;
    m.kind = kind;
    m.success = true;
    for (const Cycle& c : view.full)
        if (!dropped_full || c != *dropped_full) m.added.push_back(c);
    for (const Cycle& c : extra) m.added.push_back(c);
    return m;
}

std::vector<VertexId> ones(const View& view) {
    std::vector<VertexId> out;
    for (const Cycle& c : view.small)
        if (c.size() == 1) out.push_back(c[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Move> detect_merge_one_cycles(const Graph& g, const View& view) {
    auto singles = ones(view);
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i + 1; j < singles.size(); ++j)
            if (g.has_edge(singles[i], singles[j]))
                return finish_move(MoveKind::MergeOneCycles, {{singles[i]}, {singles[j]}},
                                   {{singles[i], singles[j]}});
    return std::nullopt;
}

std::optional<Move> detect_absorb_common_neighbor(const Graph& g, const CycleCollection& coll,
                                                  const View& view) {
    for (const Cycle& c : view.small) {
        if (c.size() < 2) continue;
        for (const auto& [v, w] : cycle_edges(c)) {
            for (VertexId x : common_neighbors(g, v, w)) {
                auto d = coll.cycle_containing(x);
                if (!d || *d == c) continue;
                if (d->size() > c.size() || d->size() >= static_cast<std::size_t>(view.r))
                    continue;
                return finish_move(MoveKind::AbsorbCommonNeighbor, {c, *d},
                                   {splice_edge(c, v, w, {x})});
            }
        }
    }
    return std::nullopt;
}

std::optional<Move> detect_absorb_two_for_one(const Graph& g, const View& view) {
    for (const Cycle& host : view.small) {
        if (host.size() < 3) continue;
        std::size_t n = host.size();
        for (const Cycle& donor : view.small) {
            if (donor.size() < 2 || donor.size() > host.size() || donor == host) continue;
            for (const auto& [v, w] : cycle_edges(donor)) {
                auto cn = common_neighbors(g, v, w);
                std::set<VertexId> common(cn.begin(), cn.end());
                for (std::size_t p = 0; p < n; ++p) {
                    VertexId u1 = host[p];
                    VertexId u2 = host[(p + 2) % n];
                    if (!common.count(u1) || !common.count(u2)) continue;
                    // New cycle: u1, w, v, u2, then onward around host; the
                    // vertex between u1 and u2 is displaced.
                    Cycle grown{u1, w, v, u2};
                    for (std::size_t j = 3; j < n; ++j) grown.push_back(host[(p + j) % n]);
                    return finish_move(MoveKind::AbsorbTwoForOne, {host, donor}, {grown});
                }
            }
        }
    }
    return std::nullopt;
}

// The v-to-w path through every vertex of `c`, where vw is an edge of c.
std::vector<VertexId> long_way_around(const Cycle& c, VertexId v, VertexId w) {
    if (c.size() == 2) return {v, w};
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == v && c[(i + 1) % n] == w) {
            std::vector<VertexId> out;
            for (std::size_t j = 0; j < n; ++j) out.push_back(c[(i + 1 + j) % n]);
            std::reverse(out.begin(), out.end());  // starts at v, ends at w
            return out;
        }
        if (c[i] == w && c[(i + 1) % n] == v) {
            std::vector<VertexId> out;
            for (std::size_t j = 0; j < n; ++j) out.push_back(c[(i + 1 + j) % n]);
            return out;
        }
    }
    throw std::logic_error("long_way_around: edge not on cycle");
}

std::optional<Move> detect_bridge_swap(const Graph& g, const View& view, int k) {
    for (const Cycle& c1 : view.small) {
        if (c1.size() < 2) continue;
        std::size_t n = c1.size();
        for (const Cycle& c2 : view.small) {
            if (c2.size() < 2 || c2.size() > c1.size() || c2 == c1) continue;
            for (const auto& [v, w] : cycle_edges(c2)) {
                auto cn = common_neighbors(g, v, w);
                std::set<VertexId> common(cn.begin(), cn.end());
                std::vector<std::size_t> pos;
                for (std::size_t i = 0; i < n; ++i)
                    if (common.count(c1[i])) pos.push_back(i);
                if (pos.size() < 2) continue;
                auto bridge = long_way_around(c2, v, w);
                for (std::size_t t = 0; t < pos.size(); ++t) {
                    std::size_t pa = pos[t];
                    std::size_t pb = pos[(t + 1) % pos.size()];
                    std::size_t gap = (pb + n - pa) % n;
                    // Replace the arc interior between c1[pa] and c1[pb] by the
                    // bridge: c1[pa], v, ..., w, c1[pb], then onward around c1.
                    std::size_t grown_size = n - (gap - 1) + c2.size();
                    Cycle grown;
                    grown.push_back(c1[pa]);
                    grown.insert(grown.end(), bridge.begin(), bridge.end());
                    for (std::size_t j = 0; j + gap < n; ++j) grown.push_back(c1[(pb + j) % n]);
                    if (grown.size() != grown_size)
                        throw std::logic_error("detect_bridge_swap: size mismatch");
                    if (grown_size > static_cast<std::size_t>(view.r)) {
                        if (view.full.size() == static_cast<std::size_t>(k - 1))
                            return success_move(MoveKind::BridgeSwap, view, {grown});
                        continue;
                    }
                    if (grown_size > c1.size())
                        return finish_move(MoveKind::BridgeSwap, {c1, c2}, {grown});
                }
            }
        }
    }
    return std::nullopt;
}

// Edge choices for the arc-search moves: a proper edge for orders >= 2, the
// lone vertex doubled for 1-cycles.
std::vector<std::pair<VertexId, VertexId>> anchor_pairs(const Cycle& c) {
    if (c.size() == 1) return {{c[0], c[0]}};
    return cycle_edges(c);
}

VertexSet anchor_window(const Graph& g, const View& view, VertexId v, VertexId w) {
    VertexSet out;
    if (v == w) {
        for (VertexId x : g.neighbors(v))
            if (view.full_vertices.count(x)) out.insert(x);
    } else {
        for (VertexId x : common_neighbors(g, v, w))
            if (view.full_vertices.count(x)) out.insert(x);
    }
    return out;
}

Move build_reroute_move(MoveKind kind, const View& view, const Cycle& c1, const Cycle& c2,
                        std::pair<VertexId, VertexId> vw, std::pair<VertexId, VertexId> xy,
                        const RerouteWitness& witness) {
    const Cycle& host = view.full[witness.cycle_index];
    Cycle grown1 = c1.size() >= 2 ? splice_edge(c1, vw.first, vw.second, {*witness.spare})
                                  : Cycle{c1[0], *witness.spare};
    Cycle grown2;
    if (c2.size() >= 2) {
        grown2 = splice_edge(c2, xy.first, xy.second, witness.path);
    } else {
        grown2.push_back(c2[0]);
        grown2.insert(grown2.end(), witness.path.begin(), witness.path.end());
    }
    return finish_move(kind, {c1, c2, host}, {grown1, grown2});
}

std::optional<Move> detect_reroute_extend(const Graph& g, const View& view) {
    if (view.full.empty()) return std::nullopt;
    CycleFamily family{view.full, {}};
    for (const Cycle& c1 : view.small) {
        for (const Cycle& c2 : view.small) {
            if (c2 == c1 || c2.size() > c1.size()) continue;
            int q = view.r - static_cast<int>(c2.size());
            family.path_lengths.assign(view.full.size(), q);
            for (const auto& vw : anchor_pairs(c1)) {
                VertexSet T = anchor_window(g, view, vw.first, vw.second);
                if (T.empty()) continue;
                for (const auto& xy : anchor_pairs(c2)) {
                    VertexSet S = anchor_window(g, view, xy.first, xy.second);
                    if (S.empty()) continue;
                    if (auto witness = find_path_with_spare(family, S, T))
                        return build_reroute_move(MoveKind::RerouteExtend, view, c1, c2, vw, xy,
                                                  *witness);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Move> detect_double_reroute(const Graph& g, const View& view, int k) {
    if (view.r < 4 || view.full.size() != static_cast<std::size_t>(k - 1) || view.full.size() < 5)
        return std::nullopt;
    auto big = [&](const Cycle& c) { return 3 * c.size() > 2 * static_cast<std::size_t>(view.r); };
    CycleFamily family{view.full, {}};
    for (const Cycle& c1 : view.small) {
        if (!big(c1)) continue;
        for (const Cycle& c2 : view.small) {
            if (c2 == c1 || !big(c2) || c2.size() > c1.size()) continue;
            int q = view.r - static_cast<int>(c2.size());
            family.path_lengths.assign(view.full.size(), q);
            for (const auto& vw : cycle_edges(c1)) {
                VertexSet T = anchor_window(g, view, vw.first, vw.second);
                if (T.empty()) continue;
                for (const auto& xy : cycle_edges(c2)) {
                    VertexSet S = anchor_window(g, view, xy.first, xy.second);
                    if (S.empty()) continue;
                    auto witness = find_reroute_or_double(family, S, T);
                    if (!witness) continue;
                    if (witness->spare)
                        return build_reroute_move(MoveKind::DoubleReroute, view, c1, c2, vw, xy,
                                                  *witness);
                    const Cycle& host = view.full[witness->cycle_index];
                    Cycle grown1 = splice_edge(c1, vw.first, vw.second, *witness->second_path);
                    Cycle grown2 = splice_edge(c2, xy.first, xy.second, witness->path);
                    return success_move(MoveKind::DoubleReroute, view, {grown1, grown2}, &host);
                }
            }
        }
    }
    return std::nullopt;
}

// The a-to-b arc of c with more vertices, ends included; on a tie the arc
// following the stored orientation wins.
std::vector<VertexId> longer_arc(const Cycle& c, VertexId a, VertexId b) {
    std::size_t n = c.size();
    std::size_t ia = static_cast<std::size_t>(std::find(c.begin(), c.end(), a) - c.begin());
    std::size_t ib = static_cast<std::size_t>(std::find(c.begin(), c.end(), b) - c.begin());
    if (ia >= n || ib >= n || ia == ib) throw std::logic_error("longer_arc: bad endpoints");
    std::size_t fwd = (ib + n - ia) % n;
    std::vector<VertexId> out;
    if (fwd >= n - fwd) {
        for (std::size_t j = 0; j <= fwd; ++j) out.push_back(c[(ia + j) % n]);
    } else {
        for (std::size_t j = 0; j <= n - fwd; ++j) out.push_back(c[(ia + n - j) % n]);
    }
    return out;
}

// The complement of arc `path` on cycle c: from the back of `path` around the
// other side to its front, ends included.
std::vector<VertexId> complement_arc(const Cycle& c, const std::vector<VertexId>& path) {
    std::size_t n = c.size();
    auto it = std::find(c.begin(), c.end(), path.front());
    std::size_t at = static_cast<std::size_t>(it - c.begin());
    bool forward = path.size() >= 2 && c[(at + 1) % n] == path[1];
    std::vector<VertexId> out;
    if (forward) {
        for (std::size_t j = path.size() - 1; j < n; ++j) out.push_back(c[(at + j) % n]);
    } else {
        for (std::size_t j = path.size() - 1; j < n; ++j)
            out.push_back(c[(at + n - (j % n)) % n]);
    }
    out.push_back(path.front());
    return out;
}

std::optional<Move> detect_big_cycle_merge(const Graph& g, const View& view, int k) {
    auto singles = ones(view);
    if (singles.size() < 2) return std::nullopt;
    for (const Cycle& c0 : view.small) {
        if (c0.size() < 3) continue;
        for (const Cycle& c1 : view.small) {
            if (c1 == c0 || c1.size() < 2) continue;
            for (VertexId x : singles) {
                VertexSet S;
                for (VertexId u : g.neighbors(x))
                    if (std::find(c0.begin(), c0.end(), u) != c0.end()) S.insert(u);
                if (S.empty()) continue;
                for (VertexId xp : singles) {
                    if (xp == x) continue;
                    VertexSet T;
                    for (VertexId u : g.neighbors(xp))
                        if (std::find(c0.begin(), c0.end(), u) != c0.end()) T.insert(u);
                    if (T.empty()) continue;
                    auto crossing = find_short_crossing_path(c0, S, T);
                    if (!crossing) continue;
                    for (VertexId a : g.neighbors(x)) {
                        if (std::find(c1.begin(), c1.end(), a) == c1.end()) continue;
                        for (VertexId b : g.neighbors(xp)) {
                            if (b == a) continue;
                            if (std::find(c1.begin(), c1.end(), b) == c1.end()) continue;
                            auto bridge = longer_arc(c1, a, b);
                            std::size_t grown_size =
                                c0.size() - crossing->size() + 4 + bridge.size();
                            bool fits = grown_size <= static_cast<std::size_t>(view.r);
                            bool grows = grown_size > std::max(c0.size(), c1.size());
                            bool success = grown_size > static_cast<std::size_t>(view.r) &&
                                           view.full.size() == static_cast<std::size_t>(k - 1);
                            if (!(fits && grows) && !success) continue;
                            auto rim = complement_arc(c0, *crossing);  // w .. v
                            Cycle grown;
                            grown.push_back(x);
                            grown.insert(grown.end(), bridge.begin(), bridge.end());
                            grown.push_back(xp);
                            grown.insert(grown.end(), rim.begin(), rim.end());
                            if (grown.size() != grown_size)
                                throw std::logic_error("detect_big_cycle_merge: size mismatch");
                            if (success)
                                return success_move(MoveKind::BigCycleMerge, view, {grown});
                            return finish_move(MoveKind::BigCycleMerge,
                                               {c0, c1, {x}, {xp}}, {grown});
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

const char* move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::MergeOneCycles: return "merge_one_cycles";
        case MoveKind::AbsorbCommonNeighbor: return "absorb_common_neighbor";
        case MoveKind::AbsorbTwoForOne: return "absorb_two_for_one";
        case MoveKind::BridgeSwap: return "bridge_swap";
        case MoveKind::RerouteExtend: return "reroute_extend";
        case MoveKind::DoubleReroute: return "double_reroute";
        case MoveKind::BigCycleMerge: return "big_cycle_merge";
        case MoveKind::SuccessLongCycle: return "success_long_cycle";
    }
    return "unknown";
}

std::optional<MoveKind> move_kind_from_name(const std::string& name) {
    for (MoveKind kind :
         {MoveKind::MergeOneCycles, MoveKind::AbsorbCommonNeighbor, MoveKind::AbsorbTwoForOne,
          MoveKind::BridgeSwap, MoveKind::RerouteExtend, MoveKind::DoubleReroute,
          MoveKind::BigCycleMerge, MoveKind::SuccessLongCycle})
        if (name == move_kind_name(kind)) return kind;
    return std::nullopt;
}

std::vector<MoveKind> default_move_order() {
    return {MoveKind::MergeOneCycles, MoveKind::AbsorbCommonNeighbor, MoveKind::AbsorbTwoForOne,
            MoveKind::BridgeSwap,     MoveKind::RerouteExtend,        MoveKind::DoubleReroute,
            MoveKind::BigCycleMerge};
}

std::optional<Move> find_move(const Graph& g, const CycleCollection& c, const PackConfig& cfg) {
    View view = build_view(c);
    for (MoveKind kind : cfg.move_order) {
        std::optional<Move> m;
        switch (kind) {
            case MoveKind::MergeOneCycles: m = detect_merge_one_cycles(g, view); break;
            case MoveKind::AbsorbCommonNeighbor:
                m = detect_absorb_common_neighbor(g, c, view);
                break;
            case MoveKind::AbsorbTwoForOne: m = detect_absorb_two_for_one(g, view); break;
            case MoveKind::BridgeSwap: m = detect_bridge_swap(g, view, cfg.k); break;
            case MoveKind::RerouteExtend: m = detect_reroute_extend(g, view); break;
            case MoveKind::DoubleReroute: m = detect_double_reroute(g, view, cfg.k); break;
            case MoveKind::BigCycleMerge: m = detect_big_cycle_merge(g, view, cfg.k); break;
            case MoveKind::SuccessLongCycle:
                throw std::invalid_argument("find_move: success_long_cycle is not searchable");
        }
        if (m) return m;
    }
    return std::nullopt;
}

void apply_move(CycleCollection& c, const Move& m) {
    if (m.success) throw std::invalid_argument("apply_move: success moves are terminal");
    for (const Cycle& cyc : m.removed) c.erase(cyc);
    for (const Cycle& cyc : m.added) c.insert(cyc);
}

PackResult pack(const Graph& g, const PackConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("pack: k >= 1 required");
    if (cfg.r < 3) throw std::invalid_argument("pack: r >= 3 required");
    if (cfg.max_iterations < 1) throw std::invalid_argument("pack: max_iterations >= 1 required");
    if (cfg.move_order.empty()) throw std::invalid_argument("pack: move_order must be nonempty");
    for (MoveKind kind : cfg.move_order)
        if (kind == MoveKind::SuccessLongCycle ||
            std::count(cfg.move_order.begin(), cfg.move_order.end(), kind) != 1)
            throw std::invalid_argument(
                "pack: move_order must be a catalog subset without duplicates");

    PackResult result;
    CycleCollection coll = seed_collection(g, cfg.r);
    Potential before = potential(coll);

    for (long long iter = 0; iter < cfg.max_iterations; ++iter) {
        if (coll.bucket(cfg.r).size() >= static_cast<std::size_t>(cfg.k)) {
            Move harvest;
            harvest.kind = MoveKind::SuccessLongCycle;
            harvest.success = true;
            for (const Cycle& c : coll.bucket(cfg.r)) harvest.added.push_back(c);
            result.trace.push_back({harvest, potential(coll)});
            result.success = true;
            result.certificate = PackingCertificate{cfg.k, cfg.r, harvest.added};
            break;
        }
        auto m = find_move(g, coll, cfg);
        if (!m) {
            result.stuck = StuckInfo{"no applicable move", claim_guard_findings(g, coll)};
            break;
        }
        if (m->success) {
            result.trace.push_back({*m, potential(coll)});
            result.success = true;
            result.certificate = PackingCertificate{cfg.k, cfg.r, m->added};
            break;
        }
        apply_move(coll, *m);
        Potential after = potential(coll);
        if (!(before < after))
            throw std::logic_error("pack: move failed to increase the potential");
        auto report = validate(coll, g, true);
        if (!report.ok())
            throw std::logic_error("pack: collection invalid after move: " + report.problems[0]);
        before = after;
        result.trace.push_back({std::move(*m), std::move(after)});
    }

    if (!result.success && !result.stuck)
        result.stuck = StuckInfo{"iteration cap", claim_guard_findings(g, coll)};
    result.final_collection = std::move(coll);
    return result;
}

std::vector<std::string> claim_guard_findings(const Graph& g, const CycleCollection& c) {
    std::vector<std::string> findings;
    int r = c.order_cap();

    std::vector<Cycle> united;
    for (int order = 1; order < r; ++order)
        for (const Cycle& cyc : c.bucket(order)) united.push_back(cyc);

    for (const Cycle& a : united) {
        if (a.size() != 1) continue;
        for (const Cycle& b : united) {
            if (b.size() != 1 || b[0] <= a[0]) continue;
            if (g.has_edge(a[0], b[0]))
                findings.push_back("adjacent 1-cycles " + std::to_string(a[0]) + " and " +
                                   std::to_string(b[0]) + " left unmerged");
        }
    }

    for (const Cycle& cyc : united) {
        if (cyc.size() < 2) continue;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            VertexId v = cyc[i];
            VertexId w = cyc[(i + 1) % cyc.size()];
            if (cyc.size() == 2 && i == 1) break;
            for (VertexId x : common_neighbors(g, v, w)) {
                auto owner = c.cycle_containing(x);
                if (!owner || *owner == cyc) continue;
                if (owner->size() > cyc.size() || owner->size() >= static_cast<std::size_t>(r))
                    continue;
                findings.push_back("edge " + std::to_string(v) + "," + std::to_string(w) +
                                   " has absorbable common neighbor " + std::to_string(x));
            }
        }
    }

    for (const Cycle& donor : united) {
        if (donor.size() < 2) continue;
        for (const auto& [v, w] : cycle_edges(donor)) {
            for (const Cycle& host : united) {
                if (host.size() < 3 || host.size() < donor.size() || host == donor) continue;
                auto cn = common_neighbors(g, v, w);
                std::set<VertexId> common(cn.begin(), cn.end());
                for (std::size_t p = 0; p < host.size(); ++p)
                    if (common.count(host[p]) && common.count(host[(p + 2) % host.size()]))
                        findings.push_back("edge " + std::to_string(v) + "," + std::to_string(w) +
                                           " has two common neighbors at distance 2 on a larger "
                                           "cycle");
            }
        }
    }
    return findings;
}

std::string certificate_to_json(const PackingCertificate& cert) {
    nlohmann::json j;
    j["k"] = cert.k;
    j["r"] = cert.r;
    j["cycles"] = nlohmann::json::array();
    for (const Cycle& c : cert.cycles) j["cycles"].push_back(c);
    return j.dump();
}

PackingCertificate certificate_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        if (!j.contains("k") || !j.contains("r") || !j.contains("cycles"))
            throw std::invalid_argument("certificate json: expected keys \"k\", \"r\", \"cycles\"");
        PackingCertificate cert;
        cert.k = j.at("k").get<int>();
        cert.r = j.at("r").get<int>();
        for (const auto& item : j.at("cycles")) cert.cycles.push_back(item.get<Cycle>());
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate json: ") + e.what());
    }
}

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const TraceEntry& entry : trace) {
        nlohmann::json j;
        j["kind"] = move_kind_name(entry.move.kind);
        j["removed"] = nlohmann::json::array();
        for (const Cycle& c : entry.move.removed) j["removed"].push_back(c);
        j["added"] = nlohmann::json::array();
        for (const Cycle& c : entry.move.added) j["added"].push_back(c);
        j["success"] = entry.move.success;
        j["potential_after"] = entry.potential_after.counts;
        out.push_back(std::move(j));
    }
    return out.dump();
}

}  // namespace cyclepack
