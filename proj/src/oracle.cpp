#include "mixedcodes/oracle.hpp"

#include "mixedcodes/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <numeric>

namespace mixedcodes {

namespace {

// Fixed-capacity bitset over dynamically chosen word count; the handful of
// operations the search needs, nothing more.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t word : w) total += static_cast<std::size_t>(__builtin_popcountll(word));
        return total;
    }
    bool any() const {
        for (std::uint64_t word : w)
            if (word) return true;
        return false;
    }
    void and_with(const Bits& other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other.w[i];
    }
    void and_not_with(const Bits& other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~other.w[i];
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            std::uint64_t word = w[wi];
            while (word) {
                const int bit = __builtin_ctzll(word);
                fn(wi * 64 + static_cast<std::size_t>(bit));
                word &= word - 1;
            }
        }
    }
};

// Hamming distance between two digit rows, with early exit at limit.
std::size_t distance_capped(const std::uint16_t* a, const std::uint16_t* b, std::size_t n,
                            std::size_t limit) {
    std::size_t dist = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i] && ++dist >= limit) return dist;
    }
    return dist;
}

// Digit rows for a set of point indices, contiguous n-wide rows.
std::vector<std::uint16_t> digit_rows(const SpaceIndexer& space,
                                      const std::vector<std::size_t>& points) {
    const std::size_t n = space.dimensions();
    std::vector<std::uint16_t> rows(points.size() * n);
    std::vector<std::uint32_t> coords;
    for (std::size_t p = 0; p < points.size(); ++p) {
        space.decode_into(points[p], coords);
        for (std::size_t i = 0; i < n; ++i) rows[p * n + i] = static_cast<std::uint16_t>(coords[i]);
    }
    return rows;
}

// Visits every index at distance <= radius from center (center included).
template <typename Fn>
void for_each_in_ball(const SpaceIndexer& space, const std::vector<std::uint32_t>& center,
                      std::size_t radius, Fn&& fn) {
    const std::size_t n = space.dimensions();
    std::size_t center_index = 0;
    for (std::size_t i = 0; i < n; ++i) center_index += center[i] * space.stride_at(i);
    // DFS over coordinates, tracking how many changes remain.
    auto rec = [&](auto&& self, std::size_t coord, std::size_t index,
                   std::size_t changes_left) -> void {
        if (coord == n) {
            fn(index);
            return;
        }
        self(self, coord + 1, index, changes_left);
        if (changes_left > 0) {
            const std::size_t q = space.profile().size_at(coord);
            const std::size_t base = index - center[coord] * space.stride_at(coord);
            for (std::size_t v = 0; v < q; ++v) {
                if (v == center[coord]) continue;
                self(self, coord + 1, base + v * space.stride_at(coord), changes_left - 1);
            }
        }
    };
    rec(rec, 0, center_index, radius);
}

// Priority used for clique-cover construction and greedy seeding: sort points
// so the largest-alphabet coordinate varies fastest. Cliques then grow along
// lines of the biggest alphabet, which keeps the cover bound tight for the
// dense small-distance cases.
std::vector<std::size_t> cover_priority_order(const SpaceIndexer& space,
                                              const std::vector<std::size_t>& points) {
    const std::size_t n = space.dimensions();
    std::vector<std::uint64_t> keys(points.size());
    std::vector<std::uint32_t> coords;
    for (std::size_t p = 0; p < points.size(); ++p) {
        space.decode_into(points[p], coords);
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i) key = key * space.profile().size_at(i) + coords[i];
        keys[p] = key;
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return order;
}

// Exact maximum-independent-set search over the conflict graph, restricted to
// positions 0..m-1 with adjacency rows adj. Bound: greedy clique cover of the
// candidate set, built in a fixed priority order; each clique contributes at
// most one element. Enumeration is canonical (each set explored through its
// last member in cover order), so no solution is visited twice.
class IndependentSetSearch {
public:
    IndependentSetSearch(const std::vector<Bits>& adj, const std::vector<std::size_t>& priority,
                         double budget_seconds)
        : adj_(adj),
          priority_(priority),
          m_(priority.size()),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget_seconds))) {}

    // Returns true when the search ran to completion (result is optimal).
    bool run(const std::vector<std::size_t>& incumbent) {
        best_ = incumbent;
        Bits all(m_);
        for (std::size_t i = 0; i < m_; ++i) all.set(i);
        current_.clear();
        aborted_ = false;
        search(all, 0);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void search(Bits candidates, std::size_t depth) {
        if (aborted_) return;
        if ((++nodes_ & 0x3F) == 0 && std::chrono::steady_clock::now() > deadline_) {
            aborted_ = true;
            return;
        }
        // Greedy clique cover in priority order; label = clique ordinal (1-based).
        order_buf_.clear();
        label_buf_.clear();
        clique_common_.clear();
        for (std::size_t v : priority_) {
            if (!candidates.test(v)) continue;
            std::size_t assigned = 0;
            for (std::size_t c = 0; c < clique_common_.size(); ++c) {
                if (clique_common_[c].test(v)) {
                    clique_common_[c].and_with(adj_[v]);
                    assigned = c + 1;
                    break;
                }
            }
            if (assigned == 0) {
                clique_common_.push_back(adj_[v]);
                clique_common_.back().and_with(candidates);
                assigned = clique_common_.size();
            }
            order_buf_.push_back(v);
            label_buf_.push_back(assigned);
        }
        if (order_buf_.empty()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        if (current_.size() + clique_common_.size() <= best_.size()) return;

        // Process vertices in non-decreasing label order so that the first i
        // of them are covered by cliques 1..label[i]; the prefix bound below
        // relies on that. Stable sort keeps the priority order within a label.
        std::vector<std::size_t> perm(order_buf_.size());
        std::iota(perm.begin(), perm.end(), std::size_t(0));
        std::stable_sort(perm.begin(), perm.end(), [this](std::size_t a, std::size_t b) {
            return label_buf_[a] < label_buf_[b];
        });
        std::vector<std::size_t> order(perm.size());
        std::vector<std::size_t> labels(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            order[i] = order_buf_[perm[i]];
            labels[i] = label_buf_[perm[i]];
        }
        Bits remaining = candidates;
        for (std::size_t i = order.size(); i-- > 0;) {
            const std::size_t v = order[i];
            if (current_.size() + labels[i] <= best_.size()) return;
            remaining.reset(v);
            Bits next = remaining;
            next.and_not_with(adj_[v]);
            current_.push_back(v);
            if (!next.any()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                search(next, depth + 1);
            }
            current_.pop_back();
            if (aborted_) return;
        }
    }

    const std::vector<Bits>& adj_;
    const std::vector<std::size_t>& priority_;
    std::size_t m_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    // Node-local scratch (copied out before recursing).
    std::vector<std::size_t> order_buf_;
    std::vector<std::size_t> label_buf_;
    std::vector<Bits> clique_common_;
};

std::size_t min_distance_of(const SpaceIndexer& space, const std::vector<std::size_t>& elements) {
    const std::size_t n = space.dimensions();
    if (elements.size() <= 1) return n + 1;
    if (elements.size() <= 4000) {
        const auto rows = digit_rows(space, elements);
        std::size_t best = n + 1;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            for (std::size_t j = i + 1; j < elements.size(); ++j) {
                const std::size_t dij =
                    distance_capped(&rows[i * n], &rows[j * n], n, best);
                if (dij < best) {
                    best = dij;
                    if (best == 1) return 1;
                }
            }
        }
        return best;
    }
    // Large sets only arise from distance-1 ambients; scan one- and two-step
    // neighborhoods instead of the quadratic pair loop.
    std::vector<char> member(space.size(), 0);
    for (std::size_t e : elements) member[e] = 1;
    for (std::size_t e : elements) {
        bool found = false;
        space.for_each_neighbor(e, [&](std::size_t nb) {
            if (member[nb]) found = true;
        });
        if (found) return 1;
    }
    for (std::size_t e : elements) {
        bool found = false;
        space.for_each_neighbor(e, [&](std::size_t nb) {
            space.for_each_neighbor(nb, [&](std::size_t nb2) {
                if (nb2 != e && member[nb2]) found = true;
            });
        });
        if (found) return 2;
    }
    throw InternalCheckFailed("min distance of a large set exceeded the scan depth");
}

} // namespace

CodeSet make_code_set(const SpaceIndexer& space, std::vector<std::size_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (std::size_t e : elements) {
        if (e >= space.size()) throw IndexOutOfRange("make_code_set: element outside the space");
    }
    CodeSet code{space.profile(), std::move(elements), 0};
    code.min_distance = min_distance_of(space, code.elements);
    return code;
}

std::vector<GroupElement> enumerate_sphere(const AlphabetProfile& profile, std::size_t r,
                                           const std::vector<std::size_t>* support,
                                           std::uint64_t max_points) {
    if (profile.space_size() > Int(max_points))
        throw SpaceTooLarge("enumerate_sphere: space exceeds the enumeration cap");
    SpaceIndexer space(profile);
    std::vector<std::size_t> indices;
    if (support == nullptr) {
        indices = sphere_indices(space, r);
    } else {
        std::vector<std::size_t> sorted_support = *support;
        std::sort(sorted_support.begin(), sorted_support.end());
        indices = sphere_indices(space, r, sorted_support);
    }
    std::vector<GroupElement> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(space.decode(i));
    return out;
}

std::vector<std::uint64_t> weight_histogram(const AlphabetProfile& profile,
                                            std::uint64_t max_points) {
    if (profile.space_size() > Int(max_points))
        throw SpaceTooLarge("weight_histogram: space exceeds the enumeration cap");
    const std::size_t n = profile.length();
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<std::uint32_t> digits(n, 0);
    std::size_t weight = 0;
    const std::uint64_t total = profile.space_size().convert_to<std::uint64_t>();
    for (std::uint64_t step = 0;; ++step) {
        ++hist[weight];
        if (step + 1 == total) break;
        // Odometer increment with incremental weight maintenance.
        for (std::size_t i = 0;; ++i) {
            if (digits[i] + 1 < profile.size_at(i)) {
                if (digits[i] == 0) ++weight;
                ++digits[i];
                break;
            }
            digits[i] = 0;
            --weight;
        }
    }
    return hist;
}

MaxCodeResult max_code(const AlphabetProfile& profile, std::size_t d, Ambient ambient,
                       std::optional<std::size_t> r, const MaxCodeOptions& options) {
    const std::size_t n = profile.length();
    if (d < 1 || d > n) throw DistanceOutOfRange("max_code: d must lie in 1..n");
    if (ambient != Ambient::WholeSpace) {
        if (!r.has_value())
            throw PreconditionViolated("max_code: sphere/ball ambient needs a radius");
        if (*r > n) throw RadiusOutOfRange("max_code: radius exceeds word length");
    }
    if (profile.space_size() > Int(options.max_points))
        throw SpaceTooLarge("max_code: space exceeds the enumeration cap");
    SpaceIndexer space(profile);

    std::vector<std::size_t> points;
    switch (ambient) {
        case Ambient::WholeSpace:
            points.resize(space.size());
            std::iota(points.begin(), points.end(), std::size_t(0));
            break;
        case Ambient::Sphere:
            points = sphere_indices(space, *r);
            break;
        case Ambient::Ball:
            points = ball_indices(space, *r);
            break;
    }

    MaxCodeResult result{CodeSet{profile, {}, n + 1}, false, 0};
    if (d == 1) {
        // No conflicts: the whole ambient is the unique maximum code.
        result.code = make_code_set(space, std::move(points));
        result.exact = true;
        return result;
    }

    const std::size_t m = points.size();

    // Greedy maximal code in a fixed scan order: take a point unless it
    // conflicts with one already chosen, marking its conflict row.
    auto greedy_in_order = [&](const std::vector<std::size_t>& scan,
                               const std::vector<Bits>* adj) {
        std::vector<std::size_t> chosen;
        if (adj != nullptr) {
            Bits blocked(m);
            for (std::size_t pos : scan) {
                if (blocked.test(pos)) continue;
                chosen.push_back(pos);
                Bits row = (*adj)[pos];
                for (std::size_t wi = 0; wi < blocked.w.size(); ++wi) blocked.w[wi] |= row.w[wi];
            }
        } else {
            // Large-ambient path: mark conflict balls directly in index space.
            std::vector<char> blocked(space.size(), 0);
            std::vector<std::uint32_t> center;
            for (std::size_t pos : scan) {
                if (blocked[points[pos]]) continue;
                chosen.push_back(pos);
                space.decode_into(points[pos], center);
                for_each_in_ball(space, center, d - 1,
                                 [&](std::size_t idx) { blocked[idx] = 1; });
            }
        }
        return chosen;
    };

    std::vector<std::size_t> ascending(m);
    std::iota(ascending.begin(), ascending.end(), std::size_t(0));

    // Degraded route: the lexicographic greedy maximal code, labeled a lower
    // bound only. Used above the exact cap, and when the time budget cannot
    // even pay for the O(m^2 n) conflict-graph build the exact search needs.
    const double estimated_build_seconds = double(m) * double(m) * double(n) * 2e-9;
    if (m > options.exact_cap || options.budget_seconds < estimated_build_seconds) {
        auto chosen = greedy_in_order(ascending, nullptr);
        std::vector<std::size_t> elements;
        elements.reserve(chosen.size());
        for (std::size_t pos : chosen) elements.push_back(points[pos]);
        result.code = make_code_set(space, std::move(elements));
        result.exact = false;
        return result;
    }

    const auto rows = digit_rows(space, points);
    const auto priority = cover_priority_order(space, points);

    // Conflict adjacency: edge when distance < d.
    std::vector<Bits> adj(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (distance_capped(&rows[i * n], &rows[j * n], n, d) < d) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }

    // Seed incumbents: lexicographic scan, ascending-conflict-degree scan,
    // and the cover priority scan; keep the best.
    std::vector<std::size_t> degree_order(m);
    std::iota(degree_order.begin(), degree_order.end(), std::size_t(0));
    std::vector<std::size_t> degrees(m);
    for (std::size_t i = 0; i < m; ++i) degrees[i] = adj[i].count();
    std::stable_sort(degree_order.begin(), degree_order.end(),
                     [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });

    std::vector<std::size_t> incumbent = greedy_in_order(ascending, &adj);
    for (const auto& scan : {degree_order, priority}) {
        auto other = greedy_in_order(scan, &adj);
        if (other.size() > incumbent.size()) incumbent = std::move(other);
    }

    IndependentSetSearch search(adj, priority, options.budget_seconds);
    result.exact = search.run(incumbent);
    result.nodes = search.nodes();

    std::vector<std::size_t> elements;
    elements.reserve(search.best().size());
    for (std::size_t pos : search.best()) elements.push_back(points[pos]);
    result.code = make_code_set(space, std::move(elements));
    return result;
}

std::size_t list_size_measure(const AlphabetProfile& profile, const CodeSet& code,
                              std::size_t rho, std::uint64_t max_points) {
    if (profile != code.profile) throw ProfileMismatch("list_size_measure: profile mismatch");
    if (rho > profile.length())
        throw RadiusOutOfRange("list_size_measure: radius exceeds word length");
    if (profile.space_size() > Int(max_points))
        throw SpaceTooLarge("list_size_measure: space exceeds the enumeration cap");
    if (code.elements.empty()) throw EmptyCode("list_size_measure: empty code");
    SpaceIndexer space(profile);
    std::vector<std::uint32_t> counts(space.size(), 0);
    std::vector<std::uint32_t> center;
    for (std::size_t e : code.elements) {
        space.decode_into(e, center);
        for_each_in_ball(space, center, rho, [&](std::size_t idx) { ++counts[idx]; });
    }
    return *std::max_element(counts.begin(), counts.end());
}

} // namespace mixedcodes
