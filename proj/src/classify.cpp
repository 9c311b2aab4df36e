#include "fano/classify.hpp"

#include <algorithm>

namespace fano {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::Connected: return "Connected";
        case TriState::Disconnected: return "Disconnected";
        case TriState::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string to_string(Family f) { return f == Family::Det ? "det" : "perm"; }

Family parse_family(const std::string& text) {
    if (text == "det") return Family::Det;
    if (text == "perm") return Family::Perm;
    throw DomainError("family must be 'det' or 'perm', got '" + text + "'");
}

namespace {

void require_nonempty(const FanoParams& p) {
    if (!is_nonempty(p))
        throw DomainError("empty Fano scheme: k = " + std::to_string(p.k) +
                          " >= (r-1)n = " + std::to_string(long(p.r - 1) * p.n));
}

// Exact comparison of k against m(r-2) - ((n-m)-(r-2))^2 / 4.
bool below_small_k_bound(const FanoParams& p) {
    long d = long(p.n - p.m) - (p.r - 2);
    return 4 * long(p.k) <= 4 * long(p.m) * (p.r - 2) - d * d;
}

}  // namespace

bool det_is_smooth(const FanoParams& p) {
    require_nonempty(p);
    return p.k > long(p.r - 2) * p.n;
}

bool det_is_irreducible(const FanoParams& p) {
    require_nonempty(p);
    return p.m != p.n && p.k > long(p.r - 2) * p.n + p.m - p.r + 1;
}

ConnectivityVerdict det_connectivity(const FanoParams& p) {
    require_nonempty(p);
    long k = p.k;
    // Disconnection: some compression component with 0 <= s <= r-2 is smooth
    // and isolated.  Both gap conditions must hold (the column gap is vacuous
    // at s = 0).
    for (int s = 0; s <= p.r - 2; ++s) {
        long ks = kappa(p, s);
        if (k > ks) continue;
        bool row_gap = k > ks - (p.m - s - 1);
        bool col_gap = s == 0 || k > ks - (p.n - p.r + s);
        if (row_gap && col_gap) return {TriState::Disconnected, "isolated-compression", s};
    }
    // r = m: the disconnection criterion above is exact.
    if (p.r == p.m) return {TriState::Connected, "square-exact", std::nullopt};
    long k0 = kappa(p, 0);
    if (k > k0) return {TriState::Connected, "chain-above-kappa0", std::nullopt};
    if (k <= k0 - long(p.m - p.r + 1) * (p.r - 1))
        return {TriState::Connected, "c0-meets-top", std::nullopt};
    if (below_small_k_bound(p)) return {TriState::Connected, "small-k-bound", std::nullopt};
    return {TriState::Unknown, "open", std::nullopt};
}

TriState det_is_connected(const FanoParams& p) { return det_connectivity(p).state; }

bool perm_is_smooth(const FanoParams& p) {
    require_nonempty(p);
    return p.n == 2 || p.k > long(p.r - 2) * p.n + 1;
}

bool perm_is_irreducible(const FanoParams& p) {
    require_nonempty(p);
    return false;
}

ConnectivityVerdict perm_connectivity(const FanoParams& p) {
    require_nonempty(p);
    long k = p.k;
    // Lines on the smooth 2x2 quadric: two disjoint rulings.
    if (p.m == 2 && p.n == 2 && p.r == 2 && p.k == 1)
        return {TriState::Disconnected, "quadric-rulings", std::nullopt};
    // The 4-planes in the 3x3 case split into three components (explicit
    // fixed-point census); the generic criterion below does not reach this
    // quadruple.
    if (p.m == 3 && p.n == 3 && p.r == 3 && p.k == 4)
        return {TriState::Disconnected, "3x3-k4-census", std::nullopt};
    for (int s = 0; s <= p.r - 1; ++s) {
        long ks = kappa(p, s);
        if (k > ks) continue;
        bool edge = s == 0 || s == p.r - 1;
        if (k < (edge ? 2 : 5)) continue;
        if (s != 0 && s + 1 + p.n - p.r < 3) continue;
        if (s != p.r - 1 && p.m - s < 3) continue;
        bool row_gap = s == p.r - 1 || k > ks - (p.m - s - 2);
        bool col_gap = s == 0 || k > ks - (p.n - p.r + s - 1);
        if (row_gap && col_gap) return {TriState::Disconnected, "isolated-compression", s};
    }
    // Connectedness: every compression subscheme chains through to |tau|=r-1.
    long k0 = kappa(p, 0);
    long kr2 = kappa(p, p.r - 2);
    bool chain = k <= std::max(k0, kr2);
    for (int s = 1; s <= p.r - 2 && chain; ++s) {
        long ks = kappa(p, s);
        if (k <= ks && k > ks - std::min(long(p.m - s - 1), long(p.n - p.r + s))) chain = false;
    }
    if (chain && k <= k0 && k > k0 - long(p.m - p.r + 1) * (p.r - 1)) chain = false;
    if (chain) return {TriState::Connected, "compression-chain", std::nullopt};
    if (below_small_k_bound(p)) return {TriState::Connected, "small-k-bound", std::nullopt};
    return {TriState::Unknown, "open", std::nullopt};
}

TriState perm_is_connected(const FanoParams& p) { return perm_connectivity(p).state; }

std::vector<TableRow> render_table(Family family, int n_min, int n_max) {
    if (n_min < 2 || n_min > n_max || n_max > 12)
        throw DomainError("table: need 2 <= n_min <= n_max <= 12");
    std::vector<TableRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        row.nonempty_max_k = (n - 1) * n - 1;
        if (family == Family::Det) {
            long sing = long(n - 2) * n;
            if (sing >= 1) row.singular_max_k = int(sing);
        } else if (n != 2) {
            row.singular_max_k = int(long(n - 2) * n + 1);
        }
        row.connected.reserve(row.nonempty_max_k);
        for (int k = 1; k <= row.nonempty_max_k; ++k) {
            FanoParams p(n, n, n, k);
            row.connected.push_back(family == Family::Det ? det_connectivity(p).state
                                                          : perm_connectivity(p).state);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fano
