#include "xray/transform.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <utility>

#include "xray/structure.hpp"

namespace xray {

namespace {

std::string line_name(const Line& l) {
    return "{" + std::to_string(l.a) + ", " + std::to_string(l.b) + "}";
}

}  // namespace

LineSums radon_transform(const DensityFunction& f, const LineComplex& c) {
    if (!same_space(f.space, c.space()))
        fail(Errc::space_mismatch, "density and complex live on different spaces");
    if (static_cast<int>(f.values.size()) != f.space.num_points)
        fail(Errc::space_mismatch, "density has " + std::to_string(f.values.size()) +
                                       " values for " + std::to_string(f.space.num_points) +
                                       " points");
    LineSums out{c.space(), {}};
    for (const Line& l : c.lines()) out.values[l] = f.values[l.a] + f.values[l.b];
    return out;
}

IncidenceMatrix incidence_matrix(const LineComplex& c) {
    IncidenceMatrix m;
    m.row_count = c.size();
    m.col_count = c.num_points();
    m.entries.assign(static_cast<std::size_t>(m.row_count) * m.col_count, 0);
    for (int i = 0; i < m.row_count; ++i) {
        const Line& l = c.lines()[i];
        m.entries[static_cast<std::size_t>(i) * m.col_count + l.a] = 1;
        m.entries[static_cast<std::size_t>(i) * m.col_count + l.b] = 1;
    }
    return m;
}

int rank(const IncidenceMatrix& m) {
    const int rows = m.row_count, cols = m.col_count;
    std::vector<BigInt> a(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i) * cols + j] = m.at(i, j);
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * cols + j]; };

    // One-step fraction-free elimination: after each pivot, entries are
    // minors of the original matrix, so division by the previous pivot is
    // exact. Columns without a pivot are skipped.
    BigInt prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                BigInt num = at(r, col) * at(i, j) - at(i, col) * at(r, j);
                BigInt q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                at(i, j) = std::move(q);
            }
            at(i, col) = 0;
        }
        prev = at(r, col);
        ++r;
    }
    return r;
}

bool is_admissible_rank(const LineComplex& c) {
    return rank(incidence_matrix(c)) == c.num_points();
}

DensityFunction reconstruct(const LineComplex& c, const LineSums& s) {
    if (!same_space(c.space(), s.space))
        fail(Errc::space_mismatch, "sums and complex live on different spaces");
    if (static_cast<int>(s.values.size()) != c.size())
        fail(Errc::inconsistent_data,
             "sums cover " + std::to_string(s.values.size()) + " lines, complex has " +
                 std::to_string(c.size()));
    for (const Line& l : c.lines())
        if (!s.values.count(l))
            fail(Errc::inconsistent_data, "no sum given for line " + line_name(l));

    const AdmissibilityReport rep = is_admissible_structural(c);
    if (!rep.admissible)
        fail(Errc::not_admissible, "line sums over an inadmissible complex do not determine a density");

    const int n = c.num_points();
    std::vector<std::vector<int>> adj(n);
    for (const Line& l : c.lines()) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    auto sum_of = [&](int u, int v) -> const Rational& { return s.values.at(Line::of(u, v)); };

    DensityFunction f{c.space(), std::vector<Rational>(n, Rational(0))};
    std::vector<char> assigned(n, 0);
    for (const ComponentReport& comp : rep.components) {
        // Admissible, so every component carries an odd cycle; solve around
        // it, then push values outward along the remaining edges.
        const std::vector<int>& cyc = *comp.odd_cycle;
        const int len = static_cast<int>(cyc.size());
        Rational alternating(0);
        for (int j = 0; j < len; ++j) {
            const Rational& sj = sum_of(cyc[j], cyc[(j + 1) % len]);
            alternating += (j % 2 == 0) ? sj : -sj;
        }
        f.values[cyc[0]] = alternating / 2;
        assigned[cyc[0]] = 1;
        for (int j = 0; j + 1 < len; ++j) {
            f.values[cyc[j + 1]] = sum_of(cyc[j], cyc[j + 1]) - f.values[cyc[j]];
            assigned[cyc[j + 1]] = 1;
        }
        std::queue<int> q;
        for (int v : cyc) q.push(v);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (assigned[w]) continue;
                f.values[w] = sum_of(u, w) - f.values[u];
                assigned[w] = 1;
                q.push(w);
            }
        }
    }

    for (const Line& l : c.lines())
        if (f.values[l.a] + f.values[l.b] != s.values.at(l))
            fail(Errc::inconsistent_data, "no density matches the sum on line " + line_name(l));
    return f;
}

namespace {

// Cyclic Jacobi diagonalization of a symmetric matrix stored row-major.
void jacobi_rotate(std::vector<double>& a, int n, int p, int q) {
    const double apq = a[static_cast<std::size_t>(p) * n + q];
    if (apq == 0.0) return;
    const double app = a[static_cast<std::size_t>(p) * n + p];
    const double aqq = a[static_cast<std::size_t>(q) * n + q];
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double cs = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * cs;
    a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
    a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
    a[static_cast<std::size_t>(p) * n + q] = 0.0;
    a[static_cast<std::size_t>(q) * n + p] = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a[static_cast<std::size_t>(k) * n + p];
        const double akq = a[static_cast<std::size_t>(k) * n + q];
        a[static_cast<std::size_t>(k) * n + p] = a[static_cast<std::size_t>(p) * n + k] =
            cs * akp - sn * akq;
        a[static_cast<std::size_t>(k) * n + q] = a[static_cast<std::size_t>(q) * n + k] =
            sn * akp + cs * akq;
    }
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double v = a[static_cast<std::size_t>(p) * n + q];
            sum += v * v;
        }
    return std::sqrt(2.0 * sum);
}

}  // namespace

std::vector<double> signless_laplacian_spectrum(const LineComplex& c, double tolerance) {
    const int n = c.num_points();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const Line& l : c.lines()) {
        a[static_cast<std::size_t>(l.a) * n + l.b] += 1.0;
        a[static_cast<std::size_t>(l.b) * n + l.a] += 1.0;
        a[static_cast<std::size_t>(l.a) * n + l.a] += 1.0;
        a[static_cast<std::size_t>(l.b) * n + l.b] += 1.0;
    }
    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a, n) > 1e-12; ++sweep)
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, n, p, q);

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) {
        double v = a[static_cast<std::size_t>(i) * n + i];
        if (v < 0.0) {
            if (v < -tolerance) throw std::logic_error("negative eigenvalue beyond tolerance");
            v = 0.0;
        }
        eig[i] = v;
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

LineSums parse_sums(std::istream& in) {
    std::optional<PointSpace> space;
    LineSums out;
    std::string raw;
    int lineno = 0;
    auto clean = [](const std::string& r) {
        std::string s = r.substr(0, r.find('#'));
        const auto first = s.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) return std::string();
        const auto last = s.find_last_not_of(" \t\r\n");
        return s.substr(first, last - first + 1);
    };
    auto strict_int = [](const std::string& tok, long long& v) {
        if (tok.empty() || tok.size() > 18) return false;
        std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
        if (i == tok.size()) return false;
        for (std::size_t j = i; j < tok.size(); ++j)
            if (tok[j] < '0' || tok[j] > '9') return false;
        v = std::stoll(tok);
        return true;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string s = clean(raw);
        if (s.empty()) continue;
        std::istringstream iss(s);
        std::vector<std::string> toks;
        std::string t;
        while (iss >> t) toks.push_back(t);
        const std::string where = " (input line " + std::to_string(lineno) + ")";
        if (!space) {
            long long value = 0;
            if (toks.size() != 2 || !strict_int(toks[1], value))
                fail(Errc::parse_error, "expected header 'points N' or 'dim n'" + where);
            if (value < 0 || value > (1 << 24))
                fail(Errc::parse_error, "unusable header value " + toks[1] + where);
            if (toks[0] == "points")
                space = PointSpace::with_points(static_cast<int>(value));
            else if (toks[0] == "dim")
                space = PointSpace::with_dim(static_cast<int>(value));
            else
                fail(Errc::parse_error, "expected header 'points N' or 'dim n'" + where);
            out.space = *space;
            continue;
        }
        if (toks.size() != 3) fail(Errc::parse_error, "expected 'u v value'" + where);
        long long u = 0, v = 0;
        if (!strict_int(toks[0], u) || !strict_int(toks[1], v))
            fail(Errc::parse_error, "expected 'u v value'" + where);
        const int n = space->num_points;
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::label_out_of_range, "labels must lie in 0.." + std::to_string(n - 1) + where);
        const Line l = Line::of(static_cast<int>(u), static_cast<int>(v));
        if (out.values.count(l))
            fail(Errc::duplicate_line, "sum for line " + line_name(l) + " repeats" + where);
        out.values[l] = parse_rational(toks[2]);
    }
    if (!space) fail(Errc::parse_error, "missing header 'points N' or 'dim n'");
    return out;
}

LineSums parse_sums_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
    return parse_sums(in);
}

std::string serialize_sums(const LineSums& s) {
    std::ostringstream out;
    if (s.space.dim)
        out << "dim " << *s.space.dim << "\n";
    else
        out << "points " << s.space.num_points << "\n";
    for (const auto& [l, v] : s.values) out << l.a << " " << l.b << " " << format_rational(v) << "\n";
    return out.str();
}

}  // namespace xray
