#include "fano/params.hpp"

#include <string>

namespace fano {

FanoParams::FanoParams(int m_, int n_, int r_, int k_) : m(m_), n(n_), r(r_), k(k_) {
    if (!(1 < r && r <= m && m <= n))
        throw DomainError("FanoParams: need 1 < r <= m <= n, got r=" + std::to_string(r) +
                          " m=" + std::to_string(m) + " n=" + std::to_string(n));
    if (k < 0) throw DomainError("FanoParams: need k >= 0, got k=" + std::to_string(k));
}

CompressionIndex compression_index(const FanoParams& p, int s) {
    if (s < 0 || s > p.r - 1)
        throw DomainError("compression index out of range: s=" + std::to_string(s) +
                          ", valid range is 0.." + std::to_string(p.r - 1));
    return CompressionIndex{s, s + 1 + p.n - p.r};
}

long kappa(const FanoParams& p, CompressionIndex ix) {
    long m = p.m, n = p.n, s = ix.s, t = ix.t;
    return m * n - (m - s) * t - 1;
}

long kappa(const FanoParams& p, int s) { return kappa(p, compression_index(p, s)); }

long delta(const FanoParams& p, CompressionIndex ix) {
    long m = p.m, r = p.r, s = ix.s, t = ix.t;
    return t * (r - s - 1) + s * (m - s);
}

long delta(const FanoParams& p, int s) { return delta(p, compression_index(p, s)); }

bool is_nonempty(const FanoParams& p) { return p.k < long(p.r - 1) * p.n; }

long compression_component_dim(const FanoParams& p, CompressionIndex ix) {
    long ks = kappa(p, ix);
    if (p.k > ks)
        throw DomainError("component absent: k=" + std::to_string(p.k) + " exceeds kappa(" +
                          std::to_string(ix.s) + ")=" + std::to_string(ks));
    return delta(p, ix) + long(p.k + 1) * (ks - p.k);
}

long compression_component_dim(const FanoParams& p, int s) {
    return compression_component_dim(p, compression_index(p, s));
}

std::vector<long> lines_component_dims(int m, int n, int r) {
    FanoParams p(m, n, r, 1);
    std::vector<long> dims;
    dims.reserve(r);
    for (int s = 0; s < r; ++s) dims.push_back(delta(p, s) + 2 * (kappa(p, s) - 1));
    return dims;
}

}  // namespace fano
