#pragma once

#include "fano/numeric.hpp"
#include "fano/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fano {

/// An m x n matrix of zeroes and stars, stored one bit per cell, row-major.
/// Encodes the coordinate subspace of matrix space spanned by the starred
/// cells, i.e. a torus fixed point of Gr(#stars, mn).
struct StarPattern {
    int m = 0, n = 0;
    std::uint64_t stars = 0;

    StarPattern() = default;
    StarPattern(int m_, int n_, std::uint64_t stars_);

    bool star(int i, int j) const { return (stars >> (i * n + j)) & 1u; }
    int star_count() const;
    StarPattern transposed() const;
    StarPattern permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

    bool operator==(const StarPattern& o) const = default;
};

/// Parse/serialize the `*`/`0` row format, rows joined by `/`
/// (e.g. "00*/00*/***").
StarPattern parse_pattern(const std::string& text);
std::string to_string(const StarPattern& p);

/// Size of a maximum matching in the bipartite graph with one edge per star.
int max_matching_size(const StarPattern& p);

struct CompressionBlock {
    int s;
    std::vector<int> zero_rows;  // m - s rows
    std::vector<int> zero_cols;  // s + 1 + n - r columns
};

/// Whether the pattern has a star-free (m-s) x (s+1+n-r) block for the given
/// specific s.
bool fits_standard_compression(const StarPattern& p, int r, int s);

/// Smallest s (with lexicographically least row set) whose standard
/// compression block avoids all stars, if any.
std::optional<CompressionBlock> lies_in_standard_compression(const StarPattern& p, int r);

/// A pattern is a fixed point of the k-plane Fano scheme exactly when its
/// star graph has no r-matching; identical verdict for both families.
bool is_fano_fixed_point(const StarPattern& p, int r);

inline constexpr long kDefaultCellCap = 25;

/// Number of (k+1)-star patterns whose matching number is below r.
Int count_fixed_points(const FanoParams& p, long cell_cap = kDefaultCellCap);

/// Lexicographically minimal bitmask over all row and column permutations
/// (transpose not applied).  Capped at m, n <= 6.
StarPattern orbit_canonical_form(const StarPattern& p);

struct OrbitInfo {
    StarPattern representative;  // the canonical form
    long size;
};

/// Row/column-permutation orbits of the fixed points counted above.
std::vector<OrbitInfo> fixed_orbits(const FanoParams& p, long cell_cap = kDefaultCellCap);
long count_fixed_orbits(const FanoParams& p, long cell_cap = kDefaultCellCap);

}  // namespace fano
