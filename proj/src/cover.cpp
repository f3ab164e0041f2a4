// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mcover/cover.hpp"

#include <algorithm>
#include <sstream>

namespace mcover {

std::optional<std::uint32_t> CoverReport::worst_diameter() const {
    std::uint32_t worst = 0;
    for (const auto& p : parts) {
        if (!p.connected) return std::nullopt;
        worst = std::max(worst, p.diameter.value());
    }
    return worst;
}

std::string CoverReport::describe() const {
    std::ostringstream out;
    out << (valid ? "valid" : "invalid") << " parts=" << parts.size() << (part_count_ok ? "" : " (too many)");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out << " [" << i << ": ";
        if (parts[i].connected)
            out << "diam " << parts[i].diameter.value();
        else
            out << "disconnected";
        out << "]";
    }
    if (!uncovered.empty()) out << " uncovered=" << uncovered.to_string();
    return out.str();
}

CoverReport verify_cover(const EdgeColouring& colouring, const Cover& cover, const Bound& bound,
                         std::size_t max_parts) {
    if (cover.parts.empty()) throw InvalidArgument("cover has no parts");
    CoverReport report;
    VertexSet covered(colouring.n());
    bool diameters_ok = true;
    for (const auto& part : cover.parts) {
        colouring.check_colour(part.colour);
        if (part.set.universe() != colouring.n()) throw InvalidArgument("cover part has wrong universe");
        if (part.set.empty()) throw InvalidArgument("cover part is empty");
        covered |= part.set;
        const Diameter d = set_diameter(colouring, part.colour, part.set);
        report.parts.push_back({d.connected(), d});
        diameters_ok = diameters_ok && within_bound(d, bound);
    }
    report.uncovered = VertexSet::full(colouring.n()) - covered;
    report.part_count_ok = cover.parts.size() <= max_parts;
    report.diameters_ok = diameters_ok;
    report.valid = report.uncovered.empty() && report.part_count_ok && diameters_ok;
    return report;
}

std::string describe_cover(const Cover& cover) {
    std::ostringstream out;
    out << "bound=";
    if (cover.claimed_bound)
        out << *cover.claimed_bound;
    else
        out << "inf";
    for (const auto& p : cover.parts) out << " c" << int(p.colour) << ":" << p.set.to_string();
    return out.str();
}

} // namespace mcover
