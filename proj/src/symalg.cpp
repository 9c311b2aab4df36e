#include "fano/symalg.hpp"

#include "fano/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fano {

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    Mono mono(nvars, 0);
    mono[index] = 1;
    p.terms_.emplace(std::move(mono), Rat(1));
    return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& value) {
    MultiPoly p(nvars);
    if (value != 0) p.terms_.emplace(Mono(nvars, 0), value);
    return p;
}

Rat MultiPoly::coefficient(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Mono& mono, const Rat& coeff) {
    if (int(mono.size()) != nvars_) throw DomainError("MultiPoly::add_term: arity mismatch");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(mono, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: arity mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: arity mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: arity mismatch");
    MultiPoly out(nvars_);
    Mono mono(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int v = 0; v < nvars_; ++v) mono[v] = ma[v] + mb[v];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int v = 0; v < nvars_; ++v) {
            if (mono[v] == 0) continue;
            os << "*z" << v;
            if (mono[v] > 1) os << "^" << mono[v];
        }
    }
    return os.str();
}

bool LinForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

LinMatrix LinMatrix::zero(int m, int n, int k) {
    if (m < 1 || n < 1 || k < 0) throw DomainError("LinMatrix: need m, n >= 1 and k >= 0");
    LinMatrix M;
    M.m = m;
    M.n = n;
    M.k = k;
    M.entries.assign(m, std::vector<LinForm>(n, LinForm{std::vector<Rat>(k + 1, Rat(0))}));
    return M;
}

MultiPoly LinMatrix::entry_poly(int i, int j) const {
    MultiPoly p(k + 1);
    Mono mono(k + 1, 0);
    for (int t = 0; t <= k; ++t) {
        if (entries[i][j].coeffs[t] == 0) continue;
        mono[t] = 1;
        p.add_term(mono, entries[i][j].coeffs[t]);
        mono[t] = 0;
    }
    return p;
}

namespace detail {

MultiPoly expand_by_permutation_sum(const std::vector<std::vector<MultiPoly>>& mat,
                                    bool signed_sum) {
    int d = int(mat.size());
    int nvars = mat[0][0].nvars();
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly out(nvars);
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inversions;
        MultiPoly prod = MultiPoly::constant(nvars, Rat(1));
        for (int i = 0; i < d && !prod.is_zero(); ++i) prod = prod * mat[i][perm[i]];
        if (signed_sum && (inversions & 1))
            out -= prod;
        else
            out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

// Expansion along the first remaining row; sub-minors memoized on the set of
// remaining columns (rows are always consumed top-down).
MultiPoly laplace_rec(const std::vector<std::vector<MultiPoly>>& mat, int row, unsigned colmask,
                      bool signed_sum, std::unordered_map<unsigned, MultiPoly>& memo) {
    int nvars = mat[0][0].nvars();
    if (colmask == 0) return MultiPoly::constant(nvars, Rat(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    MultiPoly out(nvars);
    int parity = 0;  // position of j among the remaining columns
    for (int j = 0; j < int(mat.size()); ++j) {
        if (!(colmask & (1u << j))) continue;
        if (!mat[row][j].is_zero()) {
            MultiPoly sub = laplace_rec(mat, row + 1, colmask & ~(1u << j), signed_sum, memo);
            MultiPoly term = mat[row][j] * sub;
            if (signed_sum && (parity & 1))
                out -= term;
            else
                out += term;
        }
        ++parity;
    }
    memo.emplace(colmask, out);
    return out;
}

}  // namespace

MultiPoly expand_by_laplace(const std::vector<std::vector<MultiPoly>>& mat, bool signed_sum) {
    std::unordered_map<unsigned, MultiPoly> memo;
    return laplace_rec(mat, 0, (1u << mat.size()) - 1, signed_sum, memo);
}

}  // namespace detail

namespace {

MultiPoly expand(const std::vector<std::vector<MultiPoly>>& mat, bool signed_sum) {
    int d = int(mat.size());
    if (d == 0) throw DomainError("expansion: empty matrix");
    if (d > 8) throw DomainError("expansion: size capped at 8");
    for (const auto& row : mat)
        if (int(row.size()) != d) throw DomainError("expansion: matrix not square");
    return d <= 5 ? detail::expand_by_permutation_sum(mat, signed_sum)
                  : detail::expand_by_laplace(mat, signed_sum);
}

std::vector<std::vector<MultiPoly>> to_poly_matrix(const LinMatrix& M) {
    if (M.m != M.n) throw DomainError("expansion: matrix not square");
    std::vector<std::vector<MultiPoly>> mat(M.m);
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j) mat[i].push_back(M.entry_poly(i, j));
    return mat;
}

// All size-count subsets of {0..limit-1}, ascending, lexicographic.
std::vector<std::vector<int>> subsets(int limit, int count) {
    std::vector<std::vector<int>> out;
    if (count < 0 || count > limit) return out;
    std::vector<int> pick(count);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(pick);
        int i = count - 1;
        while (i >= 0 && pick[i] == limit - count + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < count; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (count == 0) out.assign(1, {});
    return out;
}

}  // namespace

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& mat) { return expand(mat, true); }
MultiPoly perm_poly(const std::vector<std::vector<MultiPoly>>& mat) { return expand(mat, false); }
MultiPoly det_poly(const LinMatrix& M) { return expand(to_poly_matrix(M), true); }
MultiPoly perm_poly(const LinMatrix& M) { return expand(to_poly_matrix(M), false); }

bool plane_in_scheme(const LinMatrix& M, int r, Family family) {
    if (r < 1 || r > std::min(M.m, M.n)) throw DomainError("plane_in_scheme: need 1 <= r <= min(m,n)");
    auto row_sets = subsets(M.m, r);
    auto col_sets = subsets(M.n, r);
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            std::vector<std::vector<MultiPoly>> sub(r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub[i].push_back(M.entry_poly(rows[i], cols[j]));
            if (!expand(sub, family == Family::Det).is_zero()) return false;
        }
    }
    return true;
}

int span_dim(const LinMatrix& M) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < M.m; ++i) {
        for (int j = 0; j < M.n; ++j) {
            SparseRow row;
            for (int t = 0; t <= M.k; ++t)
                if (M.entries[i][j].coeffs[t] != 0) row.emplace_back(t, M.entries[i][j].coeffs[t]);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return row_rank(std::move(rows), M.k + 1);
}

std::vector<IndexPair> anchored_index_sets(int m, int n, int r, int s) {
    if (s < 0 || s > r - 1) throw DomainError("anchored_index_sets: need 0 <= s <= r-1");
    if (r > std::min(m, n)) throw DomainError("anchored_index_sets: need r <= min(m,n)");
    int t = s + 1 + n - r;
    std::vector<IndexPair> out;
    for (const auto& top : subsets(m - s, r - s)) {
        std::vector<int> rows = top;
        for (int i = m - s; i < m; ++i) rows.push_back(i);
        for (const auto& left : subsets(t, s + 1)) {
            std::vector<int> cols = left;
            for (int j = t; j < n; ++j) cols.push_back(j);
            out.push_back({rows, cols});
        }
    }
    return out;
}

}  // namespace fano
