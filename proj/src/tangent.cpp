#include "fano/tangent.hpp"

#include "fano/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fano {

CompressedPlane make_compressed_plane(const FanoParams& params, int s, LinMatrix matrix) {
    CompressionIndex ix = compression_index(params, s);
    if (matrix.m != params.m || matrix.n != params.n)
        throw InvariantError("compressed plane: matrix shape does not match parameters");
    if (matrix.k != params.k)
        throw InvariantError("compressed plane: entry arity does not match k");
    for (int i = 0; i < params.m - s; ++i)
        for (int j = 0; j < ix.t; ++j)
            if (!matrix.entries[i][j].is_zero())
                throw InvariantError("compressed plane: zero block violated at row " +
                                     std::to_string(i) + ", column " + std::to_string(j));
    int span = span_dim(matrix);
    if (span != params.k + 1)
        throw InvariantError("compressed plane: entry span is " + std::to_string(span) +
                             ", need k+1 = " + std::to_string(params.k + 1));
    return CompressedPlane{params, ix, std::move(matrix)};
}

namespace {

struct AssembledSystem {
    std::vector<SparseRow> rows;  // deduplicated
    long equations = 0;           // scalar equations before deduplication
    long unknowns = 0;
};

// One formal variable per unknown-block cell; each anchored minor, expanded
// fully, must be of degree exactly one in them (every term picks up exactly
// one cell of the unknown block).  Substituting a generic linear form for
// each cell then turns the coefficient of every z-monomial into one linear
// equation on the (m-s)(s+1+n-r)(k+1) coefficient unknowns.
AssembledSystem assemble(const CompressedPlane& plane, Family family) {
    const FanoParams& p = plane.params;
    const int m = p.m, n = p.n, r = p.r, k = p.k;
    const int s = plane.s.s, t = plane.s.t;
    const int cells = (m - s) * t;
    const int nz = k + 1;
    const int nvars = nz + cells;

    std::vector<std::vector<MultiPoly>> q(m, std::vector<MultiPoly>(n, MultiPoly(nvars)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < m - s && j < t) {
                q[i][j] = MultiPoly::variable(nvars, nz + i * t + j);
            } else if (i >= m - s && j >= t) {
                // lower-right block dropped
            } else {
                Mono mono(nvars, 0);
                for (int v = 0; v <= k; ++v) {
                    const Rat& c = plane.matrix.entries[i][j].coeffs[v];
                    if (c == 0) continue;
                    mono[v] = 1;
                    q[i][j].add_term(mono, c);
                    mono[v] = 0;
                }
            }
        }
    }

    AssembledSystem sys;
    sys.unknowns = long(cells) * nz;
    std::set<std::string> seen;
    for (const IndexPair& ix : anchored_index_sets(m, n, r, s)) {
        std::vector<std::vector<MultiPoly>> sub(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i].push_back(q[ix.rows[i]][ix.cols[j]]);
        MultiPoly minor = family == Family::Det ? det_poly(sub) : perm_poly(sub);

        std::map<Mono, SparseRow> equations;  // keyed by z-monomial
        for (const auto& [mono, coeff] : minor.terms()) {
            int cell = -1, a_degree = 0;
            for (int v = nz; v < nvars; ++v) {
                a_degree += mono[v];
                if (mono[v] > 0) cell = v - nz;
            }
            if (a_degree != 1)
                throw InvariantError(
                    "anchored expansion is not linear in the unknown block (degree " +
                    std::to_string(a_degree) + ")");
            Mono beta(mono.begin(), mono.begin() + nz);
            for (int v = 0; v <= k; ++v) {
                ++beta[v];
                equations[beta].emplace_back(cell * nz + v, coeff);
                --beta[v];
            }
        }
        for (auto& [beta, row] : equations) {
            std::sort(row.begin(), row.end());
            SparseRow merged;
            for (auto& [col, c] : row) {
                if (!merged.empty() && merged.back().first == col)
                    merged.back().second += c;
                else
                    merged.emplace_back(col, c);
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            if (merged.empty()) continue;
            ++sys.equations;
            // normalize a copy so duplicated equations are eliminated early
            std::ostringstream key;
            const Rat& lead = merged.front().second;
            for (const auto& [col, c] : merged) key << col << ':' << Rat(c / lead).str() << ';';
            if (seen.insert(key.str()).second) sys.rows.push_back(std::move(merged));
        }
    }
    return sys;
}

void place(LinMatrix& M, int i, int j, int var) { M.entries[i][j].coeffs[var] += 1; }

// Bidiagonal right block: column q carries zi in row q and zj in row q+1.
void det_right_block(LinMatrix& M, int t, int cols, int zi, int zj) {
    for (int q = 0; q < cols; ++q) {
        place(M, q, t + q, zi);
        place(M, q + 1, t + q, zj);
    }
}

// Bidiagonal lower-left block: row p carries zi in column p and zj in p+1.
void det_left_block(LinMatrix& M, int row0, int rows, int zi, int zj) {
    for (int p = 0; p < rows; ++p) {
        place(M, row0 + p, p, zi);
        place(M, row0 + p, p + 1, zj);
    }
}

// Cyclic tridiagonal right block on rows 0..rows-1 (a single column takes the
// degenerate form zi, zj, zk in the first three rows).
void perm_right_block(LinMatrix& M, int t, int rows, int cols, int zi, int zj, int zk) {
    if (cols == 1) {
        place(M, 0, t, zi);
        place(M, 1, t, zj);
        place(M, 2, t, zk);
        return;
    }
    for (int q = 0; q < cols; ++q) {
        place(M, q, t + q, zi);
        place(M, q + 1, t + q, zj);
        place(M, (q + 2) % rows, t + q, zk);
    }
}

// Cyclic tridiagonal lower-left block on columns 0..cols-1 (a single row
// takes the degenerate form zi, zj, zk in the first three columns).
void perm_left_block(LinMatrix& M, int row0, int rows, int cols, int zi, int zj, int zk) {
    if (rows == 1) {
        place(M, row0, 0, zi);
        place(M, row0, 1, zj);
        place(M, row0, 2, zk);
        return;
    }
    for (int p = 0; p < rows; ++p) {
        place(M, row0 + p, p, zi);
        place(M, row0 + p, p + 1, zj);
        place(M, row0 + p, (p + 2) % cols, zk);
    }
}

// Fill fresh pairwise-distinct variables, one per cell, in fixed order:
// right block row-major, then lower-left, then lower-right.  The last cell
// carrying each structured variable is skipped, so those variables keep one
// pure copy each and the entry span is exactly (#structured + #fresh) = k+1.
void fresh_fill(LinMatrix& M, int m, int n, int k, int s, int t, int next) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < m - s; ++i)
        for (int j = t; j < n; ++j) cells.emplace_back(i, j);
    for (int i = m - s; i < m; ++i)
        for (int j = 0; j < t; ++j) cells.emplace_back(i, j);
    for (int i = m - s; i < m; ++i)
        for (int j = t; j < n; ++j) cells.emplace_back(i, j);

    std::vector<int> reserved(next, -1);
    for (int idx = 0; idx < int(cells.size()); ++idx) {
        auto [i, j] = cells[idx];
        for (int v = 0; v < next; ++v)
            if (M.entries[i][j].coeffs[v] != 0) reserved[v] = idx;
    }
    std::set<int> skip(reserved.begin(), reserved.end());
    for (int idx = 0; idx < int(cells.size()) && next <= k; ++idx) {
        if (skip.count(idx)) continue;
        auto [i, j] = cells[idx];
        place(M, i, j, next++);
    }
    if (next != k + 1)
        throw std::logic_error("witness fill ran out of cells before reaching span k+1");
}

}  // namespace

long a_dimension(const CompressedPlane& plane, Family family) {
    AssembledSystem sys = assemble(plane, family);
    return kernel_dimension(std::move(sys.rows), int(sys.unknowns));
}

TangentReport tangent_report(const CompressedPlane& plane, Family family) {
    AssembledSystem sys = assemble(plane, family);
    TangentReport report;
    report.equations = sys.equations;
    report.unknowns = sys.unknowns;
    report.a_dim = kernel_dimension(std::move(sys.rows), int(sys.unknowns));
    long ks = kappa(plane.params, plane.s);
    report.tangent_dim = report.a_dim + long(plane.params.k + 1) * (ks - plane.params.k);
    return report;
}

CompressedPlane witness_det(int m, int n, int r, int k, int s) {
    FanoParams p(m, n, r, k);
    CompressionIndex ix = compression_index(p, s);
    long ks = kappa(p, ix);
    if (k < 1 || k > ks)
        throw DomainError("witness_det: need 1 <= k <= kappa(s) = " + std::to_string(ks));
    LinMatrix M = LinMatrix::zero(m, n, k);
    int next;
    if (s == 0) {
        det_right_block(M, ix.t, r - 1, 0, 1);
        next = 2;
    } else if (s == r - 1) {
        det_left_block(M, m - s, s, 0, 1);
        next = 2;
    } else if (k == 1) {
        det_right_block(M, ix.t, r - s - 1, 0, 1);
        det_left_block(M, m - s, s, 0, 1);
        next = 2;
    } else {
        det_right_block(M, ix.t, r - s - 1, 0, 1);
        det_left_block(M, m - s, s, 1, 2);
        next = 3;
    }
    fresh_fill(M, m, n, k, s, ix.t, next);
    return make_compressed_plane(p, s, std::move(M));
}

CompressedPlane witness_perm(int m, int n, int r, int k, int s) {
    FanoParams p(m, n, r, k);
    CompressionIndex ix = compression_index(p, s);
    long ks = kappa(p, ix);
    bool edge = s == 0 || s == r - 1;
    if (edge && k < 2) throw DomainError("witness_perm: need k >= 2 when s is 0 or r-1");
    if (!edge && k < 5) throw DomainError("witness_perm: need k >= 5 when 1 <= s <= r-2");
    if (k > ks) throw DomainError("witness_perm: need k <= kappa(s) = " + std::to_string(ks));
    if (s != 0 && ix.t < 3)
        throw DomainError("witness_perm: need s+1+n-r >= 3 when s != 0, got " +
                          std::to_string(ix.t));
    if (s != r - 1 && m - s < 3)
        throw DomainError("witness_perm: need m-s >= 3 when s != r-1, got " +
                          std::to_string(m - s));
    LinMatrix M = LinMatrix::zero(m, n, k);
    int next;
    if (s == 0) {
        perm_right_block(M, ix.t, r, r - 1, 0, 1, 2);
        next = 3;
    } else if (s == r - 1) {
        perm_left_block(M, m - s, s, s + 1, 0, 1, 2);
        next = 3;
    } else {
        perm_right_block(M, ix.t, r - s, r - s - 1, 0, 1, 2);
        perm_left_block(M, m - s, s, s + 1, 3, 4, 5);
        next = 6;
    }
    fresh_fill(M, m, n, k, s, ix.t, next);
    return make_compressed_plane(p, s, std::move(M));
}

bool is_smooth_compression_point(const CompressedPlane& plane, Family family) {
    if (family != Family::Det)
        throw DomainError("is_smooth_compression_point: determinantal family only");
    return tangent_report(plane, family).tangent_dim ==
           compression_component_dim(plane.params, plane.s);
}

}  // namespace fano
