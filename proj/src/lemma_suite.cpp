#include "cyclepack/lemma_suite.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cyclepack {

namespace {

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.insert(v);
    return out;
}

std::string set_to_string(const VertexSet& s) {
    std::string out = "{";
    for (VertexId v : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    return out + "}";
}

std::string ints_to_string(const std::vector<int>& v) {
    std::string out;
    for (int x : v) {
        if (!out.empty()) out += "+";
        out += std::to_string(x);
    }
    return out;
}

// Masks over n vertices whose popcount satisfies 3*pc > threshold_times_3,
// ascending numeric order.
std::vector<std::uint32_t> masks_above(std::size_t n, std::size_t threshold_times_3) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (3u * static_cast<std::uint32_t>(std::popcount(mask)) > threshold_times_3)
            out.push_back(mask);
    return out;
}

std::vector<std::uint32_t> masks_at_least(std::size_t n, std::size_t min_size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) >= min_size) out.push_back(mask);
    return out;
}

std::vector<std::uint32_t> masks_exactly(std::size_t n, std::size_t size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == size) out.push_back(mask);
    return out;
}

// Partitions of total into parts >= 3, non-increasing.
void partitions_into_cycles(int total, int max_part, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(total, max_part); part >= 3; --part) {
        if (total - part != 0 && total - part < 3) continue;
        current.push_back(part);
        partitions_into_cycles(total - part, part, current, out);
        current.pop_back();
    }
}

CycleFamily family_from_parts(const std::vector<int>& parts) {
    CycleFamily f;
    int next = 0;
    for (int part : parts) {
        Cycle c(part);
        std::iota(c.begin(), c.end(), next);
        next += part;
        f.cycles.push_back(std::move(c));
    }
    f.path_lengths.assign(parts.size(), 1);
    return f;
}

Cycle straight_cycle(std::size_t n) {
    Cycle c(n);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

}  // namespace

SuiteReport check_spare_guarantee_exhaustive(std::size_t max_total) {
    if (max_total < 3 || max_total > 20)
        throw std::invalid_argument("check_spare_guarantee_exhaustive: max_total must lie in 3..20");
    SuiteReport report;
    for (std::size_t n = 3; n <= max_total; ++n) {
        std::vector<std::vector<int>> parts_list;
        std::vector<int> current;
        partitions_into_cycles(static_cast<int>(n), static_cast<int>(n), current, parts_list);
        auto masks = masks_above(n, 2 * n);
        for (const auto& parts : parts_list) {
            CycleFamily family = family_from_parts(parts);
            for (std::uint32_t s_mask : masks) {
                VertexSet S = mask_to_set(s_mask);
                for (std::uint32_t t_mask : masks) {
                    VertexSet T = mask_to_set(t_mask);
                    bool more = true;
                    while (more) {
                        ++report.instances;
                        auto witness = find_path_with_spare(family, S, T);
                        if (!witness) {
                            report.failures.push_back(
                                "no witness: parts=" + ints_to_string(parts) +
                                " q=" + ints_to_string(family.path_lengths) +
                                " S=" + set_to_string(S) + " T=" + set_to_string(T));
                        } else if (!check_spare_witness(family, S, T, *witness)) {
                            report.failures.push_back(
                                "bad witness: parts=" + ints_to_string(parts) +
                                " q=" + ints_to_string(family.path_lengths) +
                                " S=" + set_to_string(S) + " T=" + set_to_string(T));
                        } else {
                            ++report.witnesses;
                        }
                        more = false;
                        for (std::size_t i = 0; i < parts.size(); ++i) {
                            if (family.path_lengths[i] < parts[i] - 1) {
                                ++family.path_lengths[i];
                                more = true;
                                break;
                            }
                            family.path_lengths[i] = 1;
                        }
                    }
                }
            }
        }
    }
    return report;
}

SuiteReport check_st_guarantee_exhaustive(std::size_t max_n) {
    if (max_n < 6 || max_n > 20)
        throw std::invalid_argument("check_st_guarantee_exhaustive: max_n must lie in 6..20");
    SuiteReport report;
    for (std::size_t n = 6; n <= max_n; ++n) {
        Cycle c = straight_cycle(n);
        std::size_t p = n / 3;
        auto s_masks = masks_at_least(n, p + 1);
        auto t_masks = masks_at_least(n, 2 * p + 2);
        for (std::uint32_t s_mask : s_masks) {
            VertexSet S = mask_to_set(s_mask);
            for (std::uint32_t t_mask : t_masks) {
                VertexSet T = mask_to_set(t_mask);
                ++report.instances;
                auto arcs = find_disjoint_st_paths(c, S, T);
                if (!arcs) {
                    report.failures.push_back("no witness: n=" + std::to_string(n) +
                                              " S=" + set_to_string(S) + " T=" + set_to_string(T));
                } else if (!check_st_paths(c, S, T, arcs->first, arcs->second, p + 1)) {
                    report.failures.push_back("bad witness: n=" + std::to_string(n) +
                                              " S=" + set_to_string(S) + " T=" + set_to_string(T));
                } else {
                    ++report.witnesses;
                }
            }
        }
    }
    return report;
}

SuiteReport check_crossing_guarantee_exhaustive(std::size_t max_n) {
    if (max_n < 3 || max_n > 20)
        throw std::invalid_argument("check_crossing_guarantee_exhaustive: max_n must lie in 3..20");
    SuiteReport report;
    for (std::size_t n = 3; n <= max_n; ++n) {
        Cycle c = straight_cycle(n);
        auto masks = masks_above(n, n);
        for (std::uint32_t s_mask : masks) {
            VertexSet S = mask_to_set(s_mask);
            for (std::uint32_t t_mask : masks) {
                VertexSet T = mask_to_set(t_mask);
                ++report.instances;
                auto path = find_short_crossing_path(c, S, T);
                if (!path) {
                    report.failures.push_back("no witness: n=" + std::to_string(n) +
                                              " S=" + set_to_string(S) + " T=" + set_to_string(T));
                } else if (!check_crossing_witness(c, S, T, *path)) {
                    report.failures.push_back("bad witness: n=" + std::to_string(n) +
                                              " S=" + set_to_string(S) + " T=" + set_to_string(T));
                } else {
                    ++report.witnesses;
                }
            }
        }
    }
    return report;
}

SuiteReport check_double_guarantee_random(std::size_t t, std::size_t r, int samples,
                                          std::uint64_t seed) {
    if (t < 5) throw std::invalid_argument("check_double_guarantee_random: at least 5 cycles");
    if (r < 4) throw std::invalid_argument("check_double_guarantee_random: order at least 4");
    if (samples < 1) throw std::invalid_argument("check_double_guarantee_random: samples >= 1");

    CycleFamily family;
    for (std::size_t i = 0; i < t; ++i) {
        Cycle c(r);
        std::iota(c.begin(), c.end(), static_cast<VertexId>(i * r));
        family.cycles.push_back(std::move(c));
    }
    std::size_t total = t * r;
    std::size_t set_size = (total * 2 - r) / 3 + 1;  // smallest size with 3|S| > r(2t-1)
    int q_max = static_cast<int>((r + 2) / 3) - 1;

    std::mt19937_64 rng(seed);
    std::vector<VertexId> pool(total);
    std::iota(pool.begin(), pool.end(), 0);
    std::uniform_int_distribution<int> q_dist(1, q_max);

    SuiteReport report;
    for (int trial = 0; trial < samples; ++trial) {
        family.path_lengths.clear();
        for (std::size_t i = 0; i < t; ++i) family.path_lengths.push_back(q_dist(rng));
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet S(pool.begin(), pool.begin() + set_size);
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet T(pool.begin(), pool.begin() + set_size);

        ++report.instances;
        auto witness = find_reroute_or_double(family, S, T);
        if (!witness) {
            report.failures.push_back("no witness: trial=" + std::to_string(trial) +
                                      " q=" + ints_to_string(family.path_lengths) +
                                      " S=" + set_to_string(S) + " T=" + set_to_string(T));
        } else if (!check_double_witness(family, S, T, *witness)) {
            report.failures.push_back("bad witness: trial=" + std::to_string(trial) +
                                      " q=" + ints_to_string(family.path_lengths) +
                                      " S=" + set_to_string(S) + " T=" + set_to_string(T));
        } else {
            ++report.witnesses;
        }
    }
    return report;
}

std::vector<SharpnessInstance> crossing_no_witness_instances(std::size_t max_n) {
    if (max_n < 3 || max_n > 20)
        throw std::invalid_argument("crossing_no_witness_instances: max_n must lie in 3..20");
    std::vector<SharpnessInstance> out;
    for (std::size_t n = 3; n <= max_n; ++n) {
        Cycle c = straight_cycle(n);
        auto masks = masks_exactly(n, n / 3);
        for (std::uint32_t s_mask : masks) {
            VertexSet S = mask_to_set(s_mask);
            for (std::uint32_t t_mask : masks) {
                VertexSet T = mask_to_set(t_mask);
                if (!find_short_crossing_path(c, S, T)) out.push_back({n, S, T});
            }
        }
    }
    return out;
}

}  // namespace cyclepack
