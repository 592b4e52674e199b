#include "xray/space.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace xray {

namespace {

constexpr int kMaxDim = 24;            // 2^24 points; beyond this N overflows practical use
constexpr int kMaxPoints = 1 << kMaxDim;

// Strips '#' comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size() || tok.size() > 20) return false;
    for (std::size_t j = i; j < tok.size(); ++j)
        if (tok[j] < '0' || tok[j] > '9') return false;
    out = std::stoll(tok);
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

PointSpace PointSpace::with_points(int num_points) {
    if (num_points < 1 || num_points > kMaxPoints)
        fail(Errc::parse_error,
             "point count must be in [1, " + std::to_string(kMaxPoints) + "], got " +
                 std::to_string(num_points));
    return PointSpace{std::nullopt, num_points};
}

PointSpace PointSpace::with_dim(int dim) {
    if (dim < 0 || dim > kMaxDim)
        fail(Errc::parse_error,
             "dim must be in [0, " + std::to_string(kMaxDim) + "], got " + std::to_string(dim));
    return PointSpace{dim, 1 << dim};
}

Line Line::of(int u, int v) {
    if (u == v)
        fail(Errc::degenerate_line, "a line needs two distinct points, got {" +
                                        std::to_string(u) + ", " + std::to_string(v) + "}");
    return u < v ? Line{u, v} : Line{v, u};
}

LineComplex::LineComplex(PointSpace space, std::vector<Line> lines)
    : space_(space), lines_(std::move(lines)) {
    const int n = space_.num_points;
    for (const Line& l : lines_) {
        if (l.a >= l.b) {
            // Accept only canonically built lines; rebuild defensively.
            fail(Errc::degenerate_line, "line {" + std::to_string(l.a) + ", " +
                                            std::to_string(l.b) + "} is not canonical");
        }
        if (l.a < 0 || l.b >= n)
            fail(Errc::label_out_of_range, "line {" + std::to_string(l.a) + ", " +
                                               std::to_string(l.b) + "} exceeds labels 0.." +
                                               std::to_string(n - 1));
    }
    std::sort(lines_.begin(), lines_.end());
    const auto dup = std::adjacent_find(lines_.begin(), lines_.end());
    if (dup != lines_.end())
        fail(Errc::duplicate_line,
             "line {" + std::to_string(dup->a) + ", " + std::to_string(dup->b) + "} repeats");
}

std::vector<Line> all_lines(const PointSpace& space) {
    std::vector<Line> out;
    const int n = space.num_points;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back(Line{a, b});
    return out;
}

LineComplex parse_complex(std::istream& in) {
    std::optional<PointSpace> space;
    std::vector<Line> lines;
    std::set<Line> seen;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string s = clean_line(raw);
        if (s.empty()) continue;
        const auto toks = split_ws(s);
        const std::string where = " (input line " + std::to_string(lineno) + ")";
        if (!space) {
            long long value = 0;
            if (toks.size() != 2 || !parse_int(toks[1], value))
                fail(Errc::parse_error, "expected header 'points N' or 'dim n'" + where);
            if (toks[0] == "points") {
                if (value < 1 || value > kMaxPoints)
                    fail(Errc::parse_error, "unusable point count " + toks[1] + where);
                space = PointSpace::with_points(static_cast<int>(value));
            } else if (toks[0] == "dim") {
                if (value < 0 || value > kMaxDim)
                    fail(Errc::parse_error, "unusable dim " + toks[1] + where);
                space = PointSpace::with_dim(static_cast<int>(value));
            } else {
                fail(Errc::parse_error, "expected header 'points N' or 'dim n'" + where);
            }
            continue;
        }
        long long u = 0, v = 0;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            fail(Errc::parse_error, "expected 'u v'" + where);
        const int n = space->num_points;
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::label_out_of_range,
                 "labels must lie in 0.." + std::to_string(n - 1) + where);
        const Line l = Line::of(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(l).second)
            fail(Errc::duplicate_line, "line {" + std::to_string(l.a) + ", " +
                                           std::to_string(l.b) + "} repeats" + where);
        lines.push_back(l);
    }
    if (!space) fail(Errc::parse_error, "missing header 'points N' or 'dim n'");
    return LineComplex(*space, std::move(lines));
}

LineComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
    return parse_complex(in);
}

std::string serialize_complex(const LineComplex& c) {
    std::ostringstream out;
    if (c.space().dim)
        out << "dim " << *c.space().dim << "\n";
    else
        out << "points " << c.space().num_points << "\n";
    for (const Line& l : c.lines()) out << l.a << " " << l.b << "\n";
    return out.str();
}

}  // namespace xray
