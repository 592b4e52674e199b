#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xray/errors.hpp"

namespace xray {

// A set of num_points labeled points 0..num_points-1. When dim is set,
// num_points == 2^dim and label k stands for the length-dim binary vector of
// k; the coordinate reading is informational only and no operation depends
// on it. Two spaces are interchangeable iff their num_points agree.
struct PointSpace {
    std::optional<int> dim;
    int num_points = 0;

    static PointSpace with_points(int num_points);
    static PointSpace with_dim(int dim);

    bool operator==(const PointSpace&) const = default;
};

// True when a and b describe the same point set (dim is metadata).
inline bool same_space(const PointSpace& a, const PointSpace& b) {
    return a.num_points == b.num_points;
}

// An unordered pair of distinct point labels, stored with a < b.
struct Line {
    int a = 0;
    int b = 0;

    // Canonicalizes the pair; throws Error(degenerate_line) when u == v.
    static Line of(int u, int v);

    auto operator<=>(const Line&) const = default;
};

// A finite set of distinct lines over a space. Lines are kept sorted
// lexicographically; duplicates and out-of-range labels are rejected at
// construction.
class LineComplex {
  public:
    LineComplex(PointSpace space, std::vector<Line> lines);

    const PointSpace& space() const { return space_; }
    const std::vector<Line>& lines() const { return lines_; }
    int num_points() const { return space_.num_points; }
    int size() const { return static_cast<int>(lines_.size()); }

    bool operator==(const LineComplex&) const = default;

  private:
    PointSpace space_;
    std::vector<Line> lines_;
};

// All C(num_points, 2) lines of the space in lexicographic order.
std::vector<Line> all_lines(const PointSpace& space);

// Text format, one record per non-blank line; '#' starts a comment.
//   header:  "points N"  or  "dim n"
//   record:  "u v"        (one line of the complex)
LineComplex parse_complex(std::istream& in);
LineComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const LineComplex& c);

}  // namespace xray
