#pragma once

#include "fano/family.hpp"
#include "fano/params.hpp"
#include "fano/symalg.hpp"

namespace fano {

/// A k-plane of m x n matrices whose upper-left (m-s) x (s+1+n-r) block is
/// identically zero and whose entries span a full (k+1)-dimensional space of
/// linear forms.
struct CompressedPlane {
    FanoParams params;
    CompressionIndex s;
    LinMatrix matrix;
};

/// Validates both invariants; throws InvariantError naming the violated one.
CompressedPlane make_compressed_plane(const FanoParams& params, int s, LinMatrix matrix);

struct TangentReport {
    long a_dim = 0;
    long tangent_dim = 0;   // a_dim + (k+1)(kappa(s) - k)
    long equations = 0;
    long unknowns = 0;
};

/// Dimension of the space of (m-s) x (s+1+n-r) blocks A of linear forms such
/// that every anchored r x r determinant (permanent) of the matrix with A in
/// place of the zero block and the lower-right block dropped vanishes
/// identically.  Computed as the kernel dimension of the exact linear system
/// on the block's coefficients.
long a_dimension(const CompressedPlane& plane, Family family);

TangentReport tangent_report(const CompressedPlane& plane, Family family);

/// Deterministic tangent-minimizing planes: bidiagonal blocks in z0, z1
/// (and z2), remaining span filled with pairwise-distinct fresh variables in
/// fixed cell order (right block row-major, then lower-left, then
/// lower-right).
CompressedPlane witness_det(int m, int n, int r, int k, int s);

/// Permanental analogue with cyclic tridiagonal blocks; enforces the size
/// hypotheses (k >= 2 for edge s, k >= 5 otherwise; s+1+n-r >= 3 when s != 0;
/// m-s >= 3 when s != r-1).
CompressedPlane witness_perm(int m, int n, int r, int k, int s);

/// Whether the tangent dimension equals the dimension of the s-compression
/// component the plane lies on (determinantal family only).
bool is_smooth_compression_point(const CompressedPlane& plane, Family family = Family::Det);

}  // namespace fano
