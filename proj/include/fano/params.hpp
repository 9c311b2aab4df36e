#pragma once

#include "fano/numeric.hpp"

#include <vector>

namespace fano {

/// Parameter quadruple (m, n, r, k): k-planes on the locus cut out by the
/// r x r minors (or permanents) of a generic m x n matrix of indeterminates.
/// The standing assumptions 1 < r <= m <= n and k >= 0 are checked once at
/// construction; everything downstream may assume them.
struct FanoParams {
    int m, n, r, k;

    FanoParams(int m_, int n_, int r_, int k_);
};

/// Compression index s together with the companion width t = s + 1 + n - r.
/// Obtained through compression_index, which checks 0 <= s <= r - 1.
struct CompressionIndex {
    int s;
    int t;
};

CompressionIndex compression_index(const FanoParams& p, int s);

/// Projective dimension of an s-compression space of m x n matrices.
long kappa(const FanoParams& p, CompressionIndex s);
long kappa(const FanoParams& p, int s);

/// Dimension of the parameter space Gr(t, n) x Gr(s, m) of s-compression
/// spaces.
long delta(const FanoParams& p, CompressionIndex s);
long delta(const FanoParams& p, int s);

/// Both families have nonempty k-plane Fano schemes exactly when k < (r-1)n.
bool is_nonempty(const FanoParams& p);

/// Dimension delta(s) + (k+1)(kappa(s) - k) of the compression component
/// indexed by s.  Throws DomainError when k > kappa(s) (component absent).
long compression_component_dim(const FanoParams& p, CompressionIndex s);
long compression_component_dim(const FanoParams& p, int s);

/// Dimensions delta(s) + 2(kappa(s) - 1) of the r components of the scheme
/// of lines, indexed by s = 0..r-1.  All equal when m = n.
std::vector<long> lines_component_dims(int m, int n, int r);

}  // namespace fano
