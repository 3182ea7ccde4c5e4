#include "hyperflow/coordinate.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hyperflow {

Coordinate::Coordinate(int row_, int index_) : row(row_), index(index_) {
    if (row < 1 || row > 3) {
        throw std::invalid_argument("Coordinate: row must be 1, 2 or 3, got " + std::to_string(row));
    }
    if (index < 1 || index % 2 == 0) {
        throw std::invalid_argument("Coordinate: index must be odd and positive, got " +
                                    std::to_string(index));
    }
}

std::string Coordinate::str() const {
    return "b[" + std::to_string(row) + "," + std::to_string(index) + "]";
}

namespace {

int parse_int(std::string_view s) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("Coordinate: malformed integer '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Coordinate Coordinate::parse(std::string_view text) {
    if (text.size() < 6 || text.substr(0, 2) != "b[" || text.back() != ']') {
        throw std::invalid_argument("Coordinate: expected \"b[i,j]\", got '" + std::string(text) + "'");
    }
    std::string_view inner = text.substr(2, text.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("Coordinate: expected \"b[i,j]\", got '" + std::string(text) + "'");
    }
    return Coordinate(parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1)));
}

}  // namespace hyperflow
