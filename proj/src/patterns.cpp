#include "fano/patterns.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace fano {

namespace {
constexpr std::uint64_t kOne = 1;
}

StarPattern::StarPattern(int m_, int n_, std::uint64_t stars_) : m(m_), n(n_), stars(stars_) {
    if (m < 1 || n < 1 || m * n > 64) throw DomainError("StarPattern: need 1 <= m*n <= 64");
    if (m * n < 64 && (stars >> (m * n)) != 0)
        throw DomainError("StarPattern: star bits beyond m*n cells");
}

int StarPattern::star_count() const { return std::popcount(stars); }

StarPattern StarPattern::transposed() const {
    StarPattern q(n, m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (star(i, j)) q.stars |= kOne << (j * m + i);
    return q;
}

StarPattern StarPattern::permuted(const std::vector<int>& row_perm,
                                  const std::vector<int>& col_perm) const {
    StarPattern q(m, n, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (star(i, j)) q.stars |= kOne << (row_perm[i] * n + col_perm[j]);
    return q;
}

StarPattern parse_pattern(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '/') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    rows.push_back(cur);
    int m = int(rows.size());
    int n = int(rows[0].size());
    if (n == 0) throw DomainError("pattern: empty row");
    StarPattern p(m, n, 0);
    for (int i = 0; i < m; ++i) {
        if (int(rows[i].size()) != n) throw DomainError("pattern: ragged rows");
        for (int j = 0; j < n; ++j) {
            char c = rows[i][j];
            if (c == '*')
                p.stars |= kOne << (i * n + j);
            else if (c != '0')
                throw DomainError("pattern: cells must be '*' or '0'");
        }
    }
    return p;
}

std::string to_string(const StarPattern& p) {
    std::string out;
    for (int i = 0; i < p.m; ++i) {
        if (i) out.push_back('/');
        for (int j = 0; j < p.n; ++j) out.push_back(p.star(i, j) ? '*' : '0');
    }
    return out;
}

namespace {

// Kuhn's augmenting-path matching over the star graph; deterministic
// (rows and columns scanned in increasing order).
bool augment(const StarPattern& p, int row, std::vector<char>& seen, std::vector<int>& match_col) {
    for (int j = 0; j < p.n; ++j) {
        if (!p.star(row, j) || seen[j]) continue;
        seen[j] = 1;
        if (match_col[j] < 0 || augment(p, match_col[j], seen, match_col)) {
            match_col[j] = row;
            return true;
        }
    }
    return false;
}

std::uint64_t next_same_popcount(std::uint64_t mask) {
    std::uint64_t c = mask & (~mask + 1), r = mask + c;
    return (((r ^ mask) >> 2) / c) | r;
}

// Columns touched by stars in the given row subset.
std::uint32_t starred_cols(const StarPattern& p, std::uint32_t rows) {
    std::uint32_t used = 0;
    for (int i = 0; i < p.m; ++i)
        if (rows & (1u << i))
            for (int j = 0; j < p.n; ++j)
                if (p.star(i, j)) used |= 1u << j;
    return used;
}

}  // namespace

int max_matching_size(const StarPattern& p) {
    std::vector<int> match_col(p.n, -1);
    int size = 0;
    for (int i = 0; i < p.m; ++i) {
        std::vector<char> seen(p.n, 0);
        if (augment(p, i, seen, match_col)) ++size;
    }
    return size;
}

bool fits_standard_compression(const StarPattern& p, int r, int s) {
    int t = s + 1 + p.n - r;
    if (t < 1 || t > p.n || s > p.m) return false;
    int need_rows = p.m - s;
    for (std::uint32_t rows = (1u << need_rows) - 1; rows < (1u << p.m);
         rows = std::uint32_t(next_same_popcount(rows))) {
        if (p.n - std::popcount(starred_cols(p, rows)) >= t) return true;
    }
    return false;
}

std::optional<CompressionBlock> lies_in_standard_compression(const StarPattern& p, int r) {
    if (r < 1 || r > std::min(p.m, p.n))
        throw DomainError("lies_in_standard_compression: need 1 <= r <= min(m,n)");
    for (int s = 0; s < r; ++s) {
        int t = s + 1 + p.n - r;
        int need_rows = p.m - s;
        for (std::uint32_t rows = (1u << need_rows) - 1; rows < (1u << p.m);
             rows = std::uint32_t(next_same_popcount(rows))) {
            std::uint32_t used_cols = starred_cols(p, rows);
            if (p.n - std::popcount(used_cols) < t) continue;
            CompressionBlock block;
            block.s = s;
            for (int i = 0; i < p.m; ++i)
                if (rows & (1u << i)) block.zero_rows.push_back(i);
            for (int j = 0; j < p.n && int(block.zero_cols.size()) < t; ++j)
                if (!(used_cols & (1u << j))) block.zero_cols.push_back(j);
            return block;
        }
    }
    return std::nullopt;
}

bool is_fano_fixed_point(const StarPattern& p, int r) { return max_matching_size(p) < r; }

namespace {

void check_census_cap(const FanoParams& p, long cell_cap) {
    if (long(p.m) * p.n > cell_cap)
        throw ResourceError("fixed-point census: m*n = " + std::to_string(p.m * p.n) +
                            " exceeds cap " + std::to_string(cell_cap));
}

template <typename Fn>
void for_each_fixed_point(const FanoParams& p, Fn&& fn) {
    int cells = p.m * p.n;
    int stars = p.k + 1;
    if (stars > cells) return;
    std::uint64_t mask = (kOne << stars) - 1;
    std::uint64_t limit = kOne << cells;  // cells <= 25 under the default cap
    while (mask < limit) {
        StarPattern pat(p.m, p.n, mask);
        if (is_fano_fixed_point(pat, p.r)) fn(pat);
        mask = next_same_popcount(mask);
    }
}

}  // namespace

Int count_fixed_points(const FanoParams& p, long cell_cap) {
    check_census_cap(p, cell_cap);
    if (p.m * p.n >= 64) throw ResourceError("fixed-point census: m*n >= 64 unsupported");
    Int count = 0;
    for_each_fixed_point(p, [&](const StarPattern&) { ++count; });
    return count;
}

StarPattern orbit_canonical_form(const StarPattern& p) {
    if (p.m > 6 || p.n > 6) throw ResourceError("orbit_canonical_form: capped at m, n <= 6");
    // For a fixed column permutation the optimal row order is just the sorted
    // row values, so only the n! column orders need an explicit sweep.
    std::vector<int> col_order(p.n);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    std::vector<std::uint32_t> rows(p.m);
    do {
        for (int i = 0; i < p.m; ++i) {
            std::uint32_t row = 0;
            for (int j = 0; j < p.n; ++j)
                if (p.star(i, col_order[j])) row |= 1u << (p.n - 1 - j);
            rows[i] = row;
        }
        std::sort(rows.begin(), rows.end());
        std::uint64_t packed = 0;
        for (int i = 0; i < p.m; ++i) packed = (packed << p.n) | rows[i];
        best = std::min(best, packed);
    } while (std::next_permutation(col_order.begin(), col_order.end()));
    // The packed value reads row-major with the first cell in the most
    // significant bit; unpack back into cell order.
    StarPattern out(p.m, p.n, 0);
    int cells = p.m * p.n;
    for (int bit = 0; bit < cells; ++bit)
        if ((best >> (cells - 1 - bit)) & 1u) out.stars |= kOne << bit;
    return out;
}

std::vector<OrbitInfo> fixed_orbits(const FanoParams& p, long cell_cap) {
    check_census_cap(p, cell_cap);
    if (p.m > 6 || p.n > 6) throw ResourceError("fixed_orbits: capped at m, n <= 6");
    std::map<std::uint64_t, OrbitInfo> orbits;  // keyed by canonical mask
    for_each_fixed_point(p, [&](const StarPattern& pat) {
        StarPattern canon = orbit_canonical_form(pat);
        auto [it, fresh] = orbits.try_emplace(canon.stars, OrbitInfo{canon, 0});
        it->second.size += 1;
        (void)fresh;
    });
    std::vector<OrbitInfo> out;
    out.reserve(orbits.size());
    for (auto& [mask, info] : orbits) out.push_back(info);
    return out;
}

long count_fixed_orbits(const FanoParams& p, long cell_cap) {
    return long(fixed_orbits(p, cell_cap).size());
}

}  // namespace fano
