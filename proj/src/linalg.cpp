#include "fano/linalg.hpp"

#include <algorithm>

namespace fano {

namespace {

const Rat* coeff_at(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target -= factor * pivot, merging sorted supports.
void axpy(SparseRow& target, const Rat& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    auto a = target.begin();
    auto b = pivot.begin();
    while (a != target.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == target.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Rat v = a->second - factor * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    target = std::move(out);
}

Int pivot_weight(const Rat& v) {
    using boost::multiprecision::abs;
    return abs(numerator(v) * denominator(v));
}

}  // namespace

int row_rank(std::vector<SparseRow> rows, int ncols) {
    std::vector<char> retired(rows.size(), 0);
    int rank = 0;
    for (int col = 0; col < ncols; ++col) {
        int pivot = -1;
        Int best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (retired[i]) continue;
            const Rat* v = coeff_at(rows[i], col);
            if (!v) continue;
            Int w = pivot_weight(*v);
            if (pivot < 0 || w < best) {
                pivot = int(i);
                best = std::move(w);
            }
        }
        if (pivot < 0) continue;
        const Rat pivot_value = *coeff_at(rows[pivot], col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (retired[i] || int(i) == pivot) continue;
            const Rat* v = coeff_at(rows[i], col);
            if (!v) continue;
            axpy(rows[i], *v / pivot_value, rows[pivot]);
        }
        retired[pivot] = 1;
        ++rank;
    }
    return rank;
}

}  // namespace fano
