#pragma once

#include "fano/family.hpp"
#include "fano/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace fano {

/// Exponent vector, one slot per variable.
using Mono = std::vector<int>;

/// Sparse polynomial over the rationals with a fixed variable count.  Terms
/// are kept in lexicographic exponent order and zero coefficients are never
/// stored, so equal polynomials compare and print identically.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly variable(int nvars, int index);
    static MultiPoly constant(int nvars, const Rat& value);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    Rat coefficient(const Mono& mono) const;

    void add_term(const Mono& mono, const Rat& coeff);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const = default;

    std::string str() const;

private:
    int nvars_;
    std::map<Mono, Rat> terms_;
};

/// Linear form in z_0..z_k, stored as its coefficient vector of length k+1.
struct LinForm {
    std::vector<Rat> coeffs;

    bool is_zero() const;
    bool operator==(const LinForm& o) const = default;
};

/// m x n matrix of linear forms sharing one coefficient length k+1,
/// representing a k-plane of m x n matrices.
struct LinMatrix {
    int m = 0, n = 0, k = -1;
    std::vector<std::vector<LinForm>> entries;

    static LinMatrix zero(int m, int n, int k);
    MultiPoly entry_poly(int i, int j) const;
    bool operator==(const LinMatrix& o) const = default;
};

// Determinant and permanent of a square matrix of polynomials (size <= 8):
// permutation sum up to 5x5, memoized Laplace expansion above.
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& mat);
MultiPoly perm_poly(const std::vector<std::vector<MultiPoly>>& mat);
MultiPoly det_poly(const LinMatrix& M);
MultiPoly perm_poly(const LinMatrix& M);

/// Membership of the k-plane in the determinantal (permanental) scheme:
/// every r x r minor (permanent) of M vanishes identically.
bool plane_in_scheme(const LinMatrix& M, int r, Family family);

/// Dimension of the rational span of all entries of M.
int span_dim(const LinMatrix& M);

struct IndexPair {
    std::vector<int> rows, cols;
};

/// All r-subsets of rows containing the last s rows, paired with all
/// r-subsets of columns containing the last r-s-1 columns (0-based indices,
/// ascending, lexicographic order).
std::vector<IndexPair> anchored_index_sets(int m, int n, int r, int s);

namespace detail {
MultiPoly expand_by_permutation_sum(const std::vector<std::vector<MultiPoly>>& mat, bool signed_sum);
MultiPoly expand_by_laplace(const std::vector<std::vector<MultiPoly>>& mat, bool signed_sum);
}  // namespace detail

}  // namespace fano
