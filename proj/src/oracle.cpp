// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "mcover/generate.hpp"
#include "mcover/solver4.hpp"

namespace mcover {

namespace {

using Mask = std::uint32_t;

// Diameter of every vertex subset in every colour, by bitmask BFS.
class SubsetTable {
  public:
    static constexpr std::uint8_t kDisconnected = 0xff;

    explicit SubsetTable(const EdgeColouring& col) : n_(col.n()), k_(col.k()) {
        if (n_ > kOracleMaxVertices)
            throw InvalidArgument("brute-force oracle handles at most " + std::to_string(kOracleMaxVertices) +
                                  " vertices");
        adj_.assign(k_ * n_, 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v)
                if (const Colour c = col.colour(u, v); c != kNoColour) adj_[(c - 1) * n_ + u] |= Mask{1} << v;
        const std::size_t subsets = std::size_t{1} << n_;
        diam_.assign(k_ * subsets, kDisconnected);
        for (Colour c = 1; c <= k_; ++c)
            for (Mask s = 1; s < subsets; ++s) diam_[(c - 1) * subsets + s] = diameter(c, s);
    }

    std::size_t n() const { return n_; }
    Colour k() const { return k_; }
    std::uint8_t at(Colour c, Mask s) const { return diam_[(c - 1) * (std::size_t{1} << n_) + s]; }

  private:
    std::uint8_t diameter(Colour c, Mask s) const {
        const Mask* adj = &adj_[(c - 1) * n_];
        std::uint8_t worst = 0;
        for (Mask rest = s; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            Mask seen = Mask{1} << v, frontier = seen;
            std::uint8_t level = 0;
            while (true) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
                next &= s & ~seen;
                if (!next) break;
                seen |= next;
                frontier = next;
                ++level;
            }
            if (seen != s) return kDisconnected;
            worst = std::max(worst, level);
        }
        return worst;
    }

    std::size_t n_;
    Colour k_;
    std::vector<Mask> adj_;
    std::vector<std::uint8_t> diam_;
};

// Inclusion-maximal admissible sets, bucketed by member. Replacing a set by an
// admissible superset keeps a cover a cover, so maximal sets suffice.
class CoverSearch {
  public:
    CoverSearch(const SubsetTable& t, const Bound& bound) : n_(t.n()) {
        const std::size_t subsets = std::size_t{1} << n_;
        std::vector<Colour> colour(subsets, kNoColour);
        for (Mask s = 1; s < subsets; ++s)
            for (Colour c = 1; c <= t.k(); ++c) {
                const auto d = t.at(c, s);
                if (d != SubsetTable::kDisconnected && (!bound || d <= *bound)) {
                    colour[s] = c;
                    break;
                }
            }
        // above[s]: some strict superset of s is admissible.
        std::vector<char> above(subsets, 0);
        for (Mask s = static_cast<Mask>(subsets - 1);; --s) {
            for (std::size_t v = 0; v < n_ && !above[s]; ++v) {
                const Mask bit = Mask{1} << v;
                if (s & bit) continue;
                if (colour[s | bit] || above[s | bit]) above[s] = 1;
            }
            if (s == 0) break;
        }
        by_vertex_.resize(n_);
        for (Mask s = 1; s < subsets; ++s) {
            if (!colour[s] || above[s]) continue;
            for (Mask r = s; r; r &= r - 1) by_vertex_[std::countr_zero(r)].push_back({s, colour[s]});
        }
    }

    std::optional<std::vector<std::pair<Mask, Colour>>> find(std::size_t parts) {
        chosen_.clear();
        const Mask all = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
        if (extend(all, parts)) return chosen_;
        return std::nullopt;
    }

  private:
    bool extend(Mask uncovered, std::size_t parts) {
        if (!uncovered) return true;
        if (parts == 0) return false;
        const int v = std::countr_zero(uncovered);
        for (const auto& entry : by_vertex_[v]) {
            chosen_.push_back(entry);
            if (extend(uncovered & ~entry.first, parts - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<std::pair<Mask, Colour>>> by_vertex_;
    std::vector<std::pair<Mask, Colour>> chosen_;
};

Cover to_cover(std::size_t n, const std::vector<std::pair<Mask, Colour>>& sets, const Bound& bound) {
    Cover cover;
    cover.claimed_bound = bound;
    for (const auto& [mask, c] : sets) {
        VertexSet s(n);
        for (Mask r = mask; r; r &= r - 1) s.insert(static_cast<Vertex>(std::countr_zero(r)));
        cover.parts.push_back({s, c});
    }
    return cover;
}

void check_n(const EdgeColouring& col) {
    if (col.n() == 0) throw InvalidArgument("empty colouring");
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct ChunkResult {
    std::uint64_t checked = 0;
    std::optional<std::uint32_t> worst = 0;
    std::vector<EdgeColouring> witnesses;
    std::uint64_t witness_count = 0;
    std::uint64_t fallbacks = 0;
};

void merge_worst(std::optional<std::uint32_t>& into, const std::optional<std::uint32_t>& x) {
    if (!into || !x)
        into.reset();
    else
        into = std::max(*into, *x);
}

} // namespace

std::optional<Cover> min_cover_bruteforce(const EdgeColouring& colouring, std::size_t max_parts, const Bound& bound) {
    check_n(colouring);
    if (max_parts < 1) throw InvalidArgument("max_parts must be at least 1");
    const SubsetTable table(colouring);
    CoverSearch search(table, bound);
    auto found = search.find(max_parts);
    if (!found) return std::nullopt;
    return to_cover(colouring.n(), *found, bound);
}

std::optional<std::uint32_t> min_bound_bruteforce(const EdgeColouring& colouring, std::size_t max_parts) {
    check_n(colouring);
    if (max_parts < 1) throw InvalidArgument("max_parts must be at least 1");
    const SubsetTable table(colouring);
    if (!CoverSearch(table, std::nullopt).find(max_parts)) return std::nullopt;
    for (std::uint32_t d = 0;; ++d)
        if (CoverSearch(table, d).find(max_parts)) return d;
}

bool is_canonical_colour_sequence(const std::vector<Colour>& seq) {
    Colour top = 0;
    for (Colour c : seq) {
        if (c > top + 1) return false;
        top = std::max(top, c);
    }
    return true;
}

ScanReport exhaustive_colouring_scan(const ScanSpec& spec) {
    if (spec.n < 1) throw InvalidArgument("scan needs n >= 1");
    if (spec.k < 1) throw InvalidArgument("scan needs k >= 1");
    if (spec.max_parts < 1) throw InvalidArgument("scan needs max_parts >= 1");
    const std::size_t n = spec.n;
    const std::size_t edges = n * (n - 1) / 2;
    std::uint64_t total = 0;
    if (spec.sampler == Sampler::Exhaustive) {
        if (n > kOracleMaxVertices) throw InvalidArgument("exhaustive scan is limited to the oracle's reach");
        long double space = 1;
        for (std::size_t i = 0; i < edges; ++i) space *= spec.k;
        if (space > 1e8L) throw InvalidArgument("exhaustive scan space exceeds 1e8 colourings");
        total = static_cast<std::uint64_t>(space);
    } else {
        if (n > kOracleMaxVertices && spec.k != 4)
            throw InvalidArgument("random scans above the oracle's reach need k = 4");
        total = spec.count;
    }
    ScanReport report;
    report.spec = spec;
    const std::uint64_t limit = std::min(total, spec.budget);
    report.complete = limit == total;

    auto colouring_at = [&](std::uint64_t index) -> std::optional<EdgeColouring> {
        if (spec.sampler == Sampler::Random) return random_uniform(n, spec.k, mix(spec.seed, index));
        std::vector<Colour> seq(edges);
        std::uint64_t x = index;
        for (std::size_t i = edges; i-- > 0;) {
            seq[i] = static_cast<Colour>(1 + x % spec.k);
            x /= spec.k;
        }
        if (!is_canonical_colour_sequence(seq)) return std::nullopt;
        std::vector<Colour> m(n * n, kNoColour);
        std::size_t e = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) m[u * n + v] = seq[e++];
        return EdgeColouring(HostGraph::complete(n), spec.k, [&](Vertex u, Vertex v) { return m[u * n + v]; });
    };

    auto judge = [&](const EdgeColouring& col, ChunkResult& out) {
        ++out.checked;
        std::optional<std::uint32_t> needed;
        if (n <= kOracleMaxVertices) {
            needed = min_bound_bruteforce(col, spec.max_parts);
        } else {
            const auto sol = solve4(col);
            if (sol.trace.branch == Branch::ConnectivityFallback) ++out.fallbacks;
            if (sol.report.parts.size() <= spec.max_parts && sol.report.uncovered.empty())
                needed = sol.report.worst_diameter();
        }
        merge_worst(out.worst, needed);
        const bool bad = !needed || (spec.bound && *needed > *spec.bound);
        if (bad) {
            ++out.witness_count;
            if (out.witnesses.size() < 16) out.witnesses.push_back(col);
        }
    };

    constexpr std::uint64_t chunk = 256;
    const std::uint64_t chunks = (limit + chunk - 1) / chunk;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::uint64_t c; !failed && (c = next++) < chunks;) {
            try {
                for (std::uint64_t i = c * chunk; i < std::min(limit, (c + 1) * chunk); ++i)
                    if (auto col = colouring_at(i)) judge(*col, results[c]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    for (auto& r : results) {
        report.instances_checked += r.checked;
        merge_worst(report.worst_bound_needed, r.worst);
        report.witness_count += r.witness_count;
        report.fallbacks += r.fallbacks;
        for (auto& w : r.witnesses)
            if (report.witnesses.size() < 16) report.witnesses.push_back(std::move(w));
    }
    return report;
}

std::vector<VertexSet> union_find_components(const EdgeColouring& colouring, Colour c) {
    colouring.check_colour(c);
    const std::size_t n = colouring.n();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (colouring.colour(u, v) == c) parent[root(u)] = root(v);
    std::vector<VertexSet> out;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const auto r = root(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(out.size());
            out.emplace_back(n);
        }
        out[slot[r]].insert(v);
    }
    return out;
}

Diameter floyd_set_diameter(const EdgeColouring& colouring, Colour c, const VertexSet& a) {
    colouring.check_colour(c);
    const auto vs = a.to_vector();
    if (vs.empty()) throw InvalidArgument("diameter of an empty set");
    const std::size_t m = vs.size();
    constexpr std::uint32_t inf = 1u << 30;
    std::vector<std::uint32_t> d(m * m, inf);
    for (std::size_t i = 0; i < m; ++i) {
        d[i * m + i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && colouring.colour(vs[i], vs[j]) == c) d[i * m + j] = 1;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d[i * m + j] = std::min(d[i * m + j], d[i * m + k] + d[k * m + j]);
    std::uint32_t worst = 0;
    for (auto x : d) {
        if (x >= inf) return Diameter::disconnected();
        worst = std::max(worst, x);
    }
    return Diameter(worst);
}

} // namespace mcover
