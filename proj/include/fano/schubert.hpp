#pragma once

#include "fano/numeric.hpp"

#include <map>
#include <utility>

namespace fano {

/// Schubert basis index for Gr(2, N): a partition (a, b) with
/// N-2 >= a >= b >= 0.
struct Partition2 {
    int a = 0, b = 0;
    auto operator<=>(const Partition2&) const = default;
};

/// Integer combination of Schubert classes of Gr(2, N).
struct ChowClass {
    int N = 0;
    std::map<Partition2, Int> coeffs;

    static ChowClass unit(int N);                           // sigma_{0,0}
    static ChowClass basis(int N, int a, int b, Int c = 1);  // c * sigma_{a,b}
    bool operator==(const ChowClass&) const = default;
};

/// Pieri: sigma_1 * sigma_{a,b} = sigma_{a+1,b} + sigma_{a,b+1}, truncated to
/// the 2 x (N-2) box.
ChowClass pieri_sigma1(const ChowClass& c);

/// sigma_{1,1} * sigma_{a,b} = sigma_{a+1,b+1}, truncated to the box.
ChowClass mul_sigma11(const ChowClass& c);

/// Coefficient of the point class sigma_{N-2,N-2}.
Int integrate(const ChowClass& c);

/// Integer polynomial in the elementary symmetric functions e1, e2 of two
/// Chern roots, keyed by (e1 exponent, e2 exponent).
struct SymPoly2 {
    std::map<std::pair<int, int>, Int> terms;
    bool operator==(const SymPoly2&) const = default;
};

/// Top Chern class of the n-th symmetric power of a rank-2 bundle with roots
/// x1, x2: the product of (i*x1 + (n-i)*x2) over i = 0..n, reduced to e1, e2.
SymPoly2 chern_top_sym(int n);

/// Degree of the scheme of lines on the n x n determinantal hypersurface:
/// the integral over Gr(2, n^2) of chern_top_sym(n) times sigma_1^(2n^2-n-5).
Int f1_degree(int n);

/// Degree of Gr(a, b) in its Pluecker embedding:
/// (a(b-a))! / prod_{1 <= i <= a < j <= b} (j - i).
Int gr_degree(int a, int b);

/// Degree of the variety of s-compression spaces of m x n matrices in the
/// Pluecker embedding of the ambient Grassmannian.
Int compression_degree(int m, int n, int r, int s);

}  // namespace fano
