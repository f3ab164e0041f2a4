// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "mcover/simd/bitops.hpp"

namespace mcover {

using Vertex = std::uint32_t;

// Fixed-universe set of vertices {0..n-1}, packed 64 per word. Bits at
// positions >= n are always zero.
class VertexSet {
  public:
    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const std::uint64_t* words, std::size_t count, std::size_t index)
            : words_(words), count_(count), index_(index) {
            if (index_ < count_) current_ = words_[index_];
            advance();
        }
        Vertex operator*() const { return static_cast<Vertex>(index_ * 64 + std::countr_zero(current_)); }
        iterator& operator++() {
            current_ &= current_ - 1;
            advance();
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const { return index_ == o.index_ && current_ == o.current_; }

      private:
        void advance() {
            while (current_ == 0 && index_ < count_) {
                ++index_;
                if (index_ < count_) current_ = words_[index_];
            }
        }
        const std::uint64_t* words_ = nullptr;
        std::size_t count_ = 0;
        std::size_t index_ = 0;
        std::uint64_t current_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }
    template <class Range>
    static VertexSet of(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }
    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::uint64_t* data() noexcept { return words_.data(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }

    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept { return simd::active().popcount(words_.data(), words_.size()); }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // Lowest member; universe() when empty.
    Vertex first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return static_cast<Vertex>(universe_);
    }

    VertexSet& operator|=(const VertexSet& o) {
        simd::active().or_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        simd::active().and_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        simd::active().andnot_into(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // *this |= a & b
    void or_and(const VertexSet& a, const VertexSet& b) {
        simd::active().or_and_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;

    bool intersects(const VertexSet& o) const {
        return simd::active().popcount_and(words_.data(), o.words_.data(), words_.size()) != 0;
    }
    bool is_subset_of(const VertexSet& o) const {
        return !simd::active().any_andnot(words_.data(), o.words_.data(), words_.size());
    }

    iterator begin() const { return iterator(words_.data(), words_.size(), 0); }
    iterator end() const { return iterator(words_.data(), words_.size(), words_.size()); }

    std::vector<Vertex> to_vector() const { return std::vector<Vertex>(begin(), end()); }
    std::string to_string() const {
        std::string out = "{";
        bool first_member = true;
        for (Vertex v : *this) {
            if (!first_member) out += ' ';
            out += std::to_string(v);
            first_member = false;
        }
        return out + "}";
    }

  private:
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mcover
