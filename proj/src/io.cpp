// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mcover {

namespace {

// Yields non-blank lines with comments stripped, tracking line numbers.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("line " + std::to_string(number_) + ": " + why);
    }

    std::vector<std::string> tokens(const std::string& line) const {
        std::istringstream s(line);
        std::vector<std::string> out;
        for (std::string t; s >> t;) out.push_back(t);
        return out;
    }

    std::uint64_t number(const std::string& token) const {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) fail("expected a number, got '" + token + "'");
        return value;
    }

  private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot write " + path);
    return f;
}

} // namespace

EdgeColouring read_colouring(std::istream& in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw InvalidArgument("colouring file is empty");
    auto head = r.tokens(line);
    if (head.size() != 2) r.fail("header must be 'n k'");
    const auto n = r.number(head[0]);
    const auto k = r.number(head[1]);
    if (k < 1 || k > 255) r.fail("colour count must lie in 1..255");
    if (n > 5000) r.fail("vertex count too large");
    const std::size_t nn = n;
    std::vector<Colour> colour(nn * nn, kNoColour);
    std::vector<char> seen(nn * nn, 0);
    std::vector<VertexPair> missing;
    std::size_t pairs = 0;
    while (r.next(line)) {
        auto t = r.tokens(line);
        if (t.size() != 3) r.fail("pair line must be 'u v c' or 'u v -'");
        auto u = r.number(t[0]), v = r.number(t[1]);
        if (u >= n || v >= n) r.fail("vertex out of range");
        if (u == v) r.fail("self pair");
        if (u > v) std::swap(u, v);
        const std::size_t idx = u * nn + v;
        if (seen[idx]) r.fail("duplicate pair " + std::to_string(u) + " " + std::to_string(v));
        seen[idx] = 1;
        ++pairs;
        if (t[2] == "-") {
            missing.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        } else {
            const auto c = r.number(t[2]);
            if (c < 1 || c > k) r.fail("colour out of range");
            colour[idx] = static_cast<Colour>(c);
        }
    }
    if (pairs != nn * (nn - (nn > 0 ? 1 : 0)) / 2) {
        for (std::size_t u = 0; u < nn; ++u)
            for (std::size_t v = u + 1; v < nn; ++v)
                if (!seen[u * nn + v])
                    throw InvalidArgument("pair " + std::to_string(u) + " " + std::to_string(v) + " is absent");
    }
    std::sort(missing.begin(), missing.end());
    HostGraph host = missing.empty() ? HostGraph::complete(nn) : HostGraph::with_missing(nn, std::move(missing));
    return EdgeColouring(std::move(host), static_cast<Colour>(k),
                         [&](Vertex u, Vertex v) { return colour[static_cast<std::size_t>(u) * nn + v]; });
}

void write_colouring(std::ostream& out, const EdgeColouring& colouring) {
    const std::size_t n = colouring.n();
    out << n << ' ' << static_cast<unsigned>(colouring.k()) << '\n';
    std::string buf;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Colour c = colouring.colour(u, v);
            buf = std::to_string(u) + ' ' + std::to_string(v) + ' ' +
                  (c == kNoColour ? std::string("-") : std::to_string(c)) + '\n';
            out << buf;
        }
    }
}

Cover read_cover(std::istream& in, std::size_t n) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw InvalidArgument("cover file is empty");
    auto head = r.tokens(line);
    if (head.size() != 2 || head[0].rfind("parts=", 0) != 0 || head[1].rfind("bound=", 0) != 0)
        r.fail("header must be 'parts=p bound=b'");
    const auto p = r.number(head[0].substr(6));
    const std::string b = head[1].substr(6);
    Cover cover;
    if (b != "inf") cover.claimed_bound = static_cast<std::uint32_t>(r.number(b));
    while (r.next(line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) r.fail("part line must be 'c: v1 v2 ...'");
        const auto ct = r.tokens(line.substr(0, colon));
        if (ct.size() != 1) r.fail("part line must start with one colour");
        const auto c = r.number(ct[0]);
        if (c < 1 || c > 255) r.fail("colour out of range");
        CoverPart part{VertexSet(n), static_cast<Colour>(c)};
        for (const auto& t : r.tokens(line.substr(colon + 1))) {
            const auto v = r.number(t);
            if (v >= n) r.fail("vertex out of range");
            part.set.insert(static_cast<Vertex>(v));
        }
        if (part.set.empty()) r.fail("empty part");
        cover.parts.push_back(std::move(part));
    }
    if (cover.parts.size() != p) throw InvalidArgument("header announces " + std::to_string(p) + " parts, found " +
                                                       std::to_string(cover.parts.size()));
    return cover;
}

void write_cover(std::ostream& out, const Cover& cover) {
    out << "parts=" << cover.parts.size() << " bound=";
    if (cover.claimed_bound)
        out << *cover.claimed_bound;
    else
        out << "inf";
    out << '\n';
    for (const auto& part : cover.parts) {
        out << static_cast<unsigned>(part.colour) << ':';
        for (Vertex v : part.set) out << ' ' << v;
        out << '\n';
    }
}

GridPointSet read_points(std::istream& in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) throw InvalidArgument("point file is empty");
    auto head = r.tokens(line);
    if (head.size() != 1) r.fail("header must be the arity l");
    const auto l = r.number(head[0]);
    if (l < 1 || l > 64) r.fail("arity must lie in 1..64");
    std::vector<GridPoint> pts;
    while (r.next(line)) {
        auto t = r.tokens(line);
        if (t.size() != l) r.fail("point must have " + std::to_string(l) + " coordinates");
        GridPoint p;
        for (const auto& s : t) {
            const auto v = r.number(s);
            if (v > UINT32_MAX) r.fail("coordinate too large");
            p.push_back(static_cast<std::uint32_t>(v));
        }
        pts.push_back(std::move(p));
    }
    return GridPointSet(l, std::move(pts));
}

void write_points(std::ostream& out, const GridPointSet& points) {
    out << points.arity() << '\n';
    for (const auto& p : points.points()) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    }
}

EdgeColouring load_colouring(const std::string& path) {
    auto f = open_in(path);
    return read_colouring(f);
}
void save_colouring(const std::string& path, const EdgeColouring& colouring) {
    auto f = open_out(path);
    write_colouring(f, colouring);
}
Cover load_cover(const std::string& path, std::size_t n) {
    auto f = open_in(path);
    return read_cover(f, n);
}
void save_cover(const std::string& path, const Cover& cover) {
    auto f = open_out(path);
    write_cover(f, cover);
}
GridPointSet load_points(const std::string& path) {
    auto f = open_in(path);
    return read_points(f);
}
void save_points(const std::string& path, const GridPointSet& points) {
    auto f = open_out(path);
    write_points(f, points);
}

} // namespace mcover
