// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "mcover/grid.hpp"

namespace mcover {

bool is_induced_path(const std::vector<GridPoint>& path) {
    std::set<GridPoint> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (grid_adjacent(path[i], path[j]) != (j == i + 1)) return false;
    return true;
}

namespace {

bool adjacent(const GridPoint& p, const GridPoint& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == q[i]) return false;
    return true;
}

bool uses_all_values(const std::vector<GridPoint>& pts, std::size_t l, std::uint32_t m) {
    for (std::size_t a = 0; a < l; ++a) {
        std::set<std::uint32_t> values;
        for (const auto& p : pts) values.insert(p[a]);
        if (values.size() == m) return true;
    }
    return false;
}

// Calls f(q) for every point whose coordinate on axis a is at most limit[a].
template <class F>
void for_each_point(const std::vector<std::uint32_t>& limit, GridPoint& q, std::size_t axis, F&& f) {
    if (axis == limit.size()) {
        f(q);
        return;
    }
    for (std::uint32_t v = 0; v <= limit[axis]; ++v) {
        q[axis] = v;
        for_each_point(limit, q, axis + 1, f);
    }
}

class Search {
  public:
    Search(std::size_t l, std::size_t d, std::uint32_t m, std::uint64_t budget)
        : l_(l), d_(d), m_(m), budget_(budget) {}

    SearchResult run_path() {
        std::vector<std::uint32_t> top(l_, 0);
        path_.push_back(GridPoint(l_, 0));
        extend_path(top);
        return finish();
    }

    SearchResult run_connected() {
        std::vector<std::uint32_t> top(l_, 0);
        set_.push_back(GridPoint(l_, 0));
        degree_.push_back(0);
        extend_set(top);
        return finish();
    }

  private:
    bool tick() {
        if (++result_.steps > budget_) {
            result_.complete = false;
            return false;
        }
        return true;
    }

    std::vector<std::uint32_t> limits(const std::vector<std::uint32_t>& top) const {
        std::vector<std::uint32_t> limit(l_);
        for (std::size_t a = 0; a < l_; ++a) limit[a] = std::min(top[a] + 1, m_ - 1);
        return limit;
    }

    void extend_path(const std::vector<std::uint32_t>& top) {
        if (!tick()) return;
        if (path_.size() > result_.best_size) {
            result_.best_size = path_.size();
            result_.witness = path_;
        }
        GridPoint q(l_);
        const auto limit = limits(top);
        for_each_point(limit, q, 0, [&](const GridPoint& cand) {
            if (!result_.complete) return;
            if (!adjacent(cand, path_.back())) return;
            for (std::size_t i = 0; i + 1 < path_.size(); ++i)
                if (adjacent(cand, path_[i]) || cand == path_[i]) return;
            auto next_top = top;
            for (std::size_t a = 0; a < l_; ++a) next_top[a] = std::max(next_top[a], cand[a]);
            path_.push_back(cand);
            extend_path(next_top);
            path_.pop_back();
        });
    }

    std::string key() const {
        auto sorted = set_;
        std::sort(sorted.begin(), sorted.end());
        std::string k;
        for (const auto& p : sorted)
            for (auto v : p) k.push_back(static_cast<char>(v));
        return k;
    }

    void extend_set(const std::vector<std::uint32_t>& top) {
        if (!tick()) return;
        if (!seen_.insert(key()).second) return;
        if (set_.size() > result_.best_size) {
            result_.best_size = set_.size();
            result_.witness = set_;
        }
        GridPoint q(l_);
        const auto limit = limits(top);
        for_each_point(limit, q, 0, [&](const GridPoint& cand) {
            if (!result_.complete) return;
            std::vector<std::size_t> nbrs;
            for (std::size_t i = 0; i < set_.size(); ++i) {
                if (cand == set_[i]) return;
                if (adjacent(cand, set_[i])) {
                    if (degree_[i] + 1 > d_) return;
                    nbrs.push_back(i);
                }
            }
            if (nbrs.empty() || nbrs.size() > d_) return;
            for (auto i : nbrs) ++degree_[i];
            set_.push_back(cand);
            degree_.push_back(nbrs.size());
            auto next_top = top;
            for (std::size_t a = 0; a < l_; ++a) next_top[a] = std::max(next_top[a], cand[a]);
            extend_set(next_top);
            set_.pop_back();
            degree_.pop_back();
            for (auto i : nbrs) --degree_[i];
        });
    }

    SearchResult finish() {
        result_.uses_all_values = uses_all_values(result_.witness, l_, m_);
        return result_;
    }

    std::size_t l_, d_;
    std::uint32_t m_;
    std::uint64_t budget_;
    SearchResult result_;
    std::vector<GridPoint> path_, set_;
    std::vector<std::size_t> degree_;
    std::unordered_set<std::string> seen_;
};

} // namespace

SearchResult bounded_degree_search(std::size_t l, std::size_t d, std::uint32_t m, SearchMode mode,
                                   std::uint64_t step_budget) {
    if (l < 1) throw InvalidArgument("search arity must be at least 1");
    if (m < 1) throw InvalidArgument("search coordinate bound must be at least 1");
    if (m > 255) throw InvalidArgument("search coordinate bound must be at most 255");
    Search s(l, d, m, step_budget);
    if (mode == SearchMode::Path) return s.run_path();
    return s.run_connected();
}

SearchResult naive_path_search(std::size_t l, std::uint32_t m) {
    if (l < 1 || m < 1) throw InvalidArgument("naive search needs l >= 1 and m >= 1");
    std::vector<GridPoint> all;
    GridPoint q(l);
    for_each_point(std::vector<std::uint32_t>(l, m - 1), q, 0, [&](const GridPoint& p) { all.push_back(p); });
    SearchResult result;
    std::vector<GridPoint> path;
    auto dfs = [&](auto&& self) -> void {
        ++result.steps;
        if (path.size() > result.best_size) {
            result.best_size = path.size();
            result.witness = path;
        }
        for (const auto& cand : all) {
            if (!path.empty() && !adjacent(cand, path.back())) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) ok = !adjacent(cand, path[i]) && cand != path[i];
            if (!ok) continue;
            path.push_back(cand);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    result.uses_all_values = uses_all_values(result.witness, l, m);
    return result;
}

} // namespace mcover
