// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Line-oriented text formats. Blank lines and '#' comments are ignored by
// every reader; malformed input throws InvalidArgument naming the line.
//
//   colouring:  "n k", then one "u v c" or "u v -" line per pair u < v
//   cover:      "parts=p bound=b" (b may be "inf"), then p lines "c: v1 v2 ..."
//   points:     "l", then one line of l coordinates per point

#include <iosfwd>
#include <string>

#include "mcover/cover.hpp"
#include "mcover/graph.hpp"
#include "mcover/grid.hpp"

namespace mcover {

EdgeColouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const EdgeColouring& colouring);

Cover read_cover(std::istream& in, std::size_t n);
void write_cover(std::ostream& out, const Cover& cover);

GridPointSet read_points(std::istream& in);
void write_points(std::ostream& out, const GridPointSet& points);

EdgeColouring load_colouring(const std::string& path);
void save_colouring(const std::string& path, const EdgeColouring& colouring);
Cover load_cover(const std::string& path, std::size_t n);
void save_cover(const std::string& path, const Cover& cover);
GridPointSet load_points(const std::string& path);
void save_points(const std::string& path, const GridPointSet& points);

} // namespace mcover
