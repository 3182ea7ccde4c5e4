#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace hyperflow {

/// A generator b[row,index] of the coordinate ring: row in {1,2,3} and an
/// odd positive index. The weight grading assigns weight(b[i,j]) = i + j.
struct Coordinate {
    int row;
    int index;

    Coordinate(int row_, int index_);

    int weight() const { return row + index; }

    friend auto operator<=>(const Coordinate&, const Coordinate&) = default;

    /// Canonical text form "b[row,index]".
    std::string str() const;

    /// Parses the canonical text form; throws std::invalid_argument otherwise.
    static Coordinate parse(std::string_view text);
};

}  // namespace hyperflow
