#include "qfrob/sparse_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qfrob {

SparseRow normalize_row(std::vector<std::pair<int, Rat>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, v] : entries) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
        if (out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

namespace {

// row -= f · pivot
SparseRow subtract_scaled(const SparseRow& row, const Rat& f, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -(f * pivot[j].second));
            ++j;
        } else {
            Rat v = row[i].second - f * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::size_t sparse_rank(int ncols, std::vector<SparseRow> rows) {
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k].first < 0 || r[k].first >= ncols)
                throw std::invalid_argument("sparse_rank: column out of range");
            if (k && r[k - 1].first >= r[k].first) throw std::invalid_argument("sparse_rank: row is not sorted");
        }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    // pivot rows keyed by leading column, scaled to a leading 1
    std::unordered_map<int, SparseRow> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const Rat f = row.front().second;
            row = subtract_scaled(row, f, it->second);
        }
        if (row.empty()) continue;
        const Rat lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        const int col = row.front().first;
        pivots.emplace(col, std::move(row));
    }
    return pivots.size();
}

}  // namespace qfrob
