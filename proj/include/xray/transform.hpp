#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xray/bigint.hpp"
#include "xray/space.hpp"

namespace xray {

// A rational-valued function on the points of a space; values[k] is the
// value at point k.
struct DensityFunction {
    PointSpace space;
    std::vector<Rational> values;
};

// Sums of a density over a set of lines: values[{a,b}] = f(a) + f(b).
struct LineSums {
    PointSpace space;
    std::map<Line, Rational> values;
};

// Sums of f over every line of c. Throws Error(space_mismatch) when the
// spaces differ or f has the wrong number of values.
LineSums radon_transform(const DensityFunction& f, const LineComplex& c);

// 0/1 matrix with one row per line of c (in the complex's canonical order)
// and one column per point; entry (i, j) is 1 iff point j lies on line i.
struct IncidenceMatrix {
    int row_count = 0;
    int col_count = 0;
    std::vector<std::uint8_t> entries;  // row-major

    std::uint8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * col_count + c]; }
};

IncidenceMatrix incidence_matrix(const LineComplex& c);

// Exact rank over the rationals by fraction-free elimination.
int rank(const IncidenceMatrix& m);

// True iff the incidence matrix of c has full column rank, i.e. line sums
// over c determine the density uniquely. Agrees with the structural test.
bool is_admissible_rank(const LineComplex& c);

// Recovers the unique density with the given sums. Throws
// Error(not_admissible) when c is inadmissible, Error(inconsistent_data)
// when s is not defined on exactly the lines of c or no density matches.
DensityFunction reconstruct(const LineComplex& c, const LineSums& s);

// Eigenvalues of M^T M (M the incidence matrix) in ascending order, i.e. of
// the degree-plus-adjacency matrix of the complex's graph. Values within
// `tolerance` below zero are clamped to zero; the matrix is positive
// semidefinite, so anything lower indicates a numerical failure. The number
// of eigenvalues below `tolerance` equals num_points - rank, so the smallest
// eigenvalue is below it iff the complex is inadmissible.
std::vector<double> signless_laplacian_spectrum(const LineComplex& c,
                                                double tolerance = 1e-9);

inline int near_zero_count(const std::vector<double>& spectrum, double tolerance = 1e-9) {
    int k = 0;
    for (double v : spectrum)
        if (v < tolerance) ++k;
    return k;
}

// Text format: the same header as a complex file, then "u v value" records
// where value is an integer or p/q.
LineSums parse_sums(std::istream& in);
LineSums parse_sums_file(const std::string& path);
std::string serialize_sums(const LineSums& s);

}  // namespace xray
