#include "qfrob/qloc.hpp"

#include <stdexcept>

#include "qfrob/errors.hpp"

namespace qfrob {

QlocSpace::QlocSpace(const CircleComplex& complex, int m, int n, int ell, int p, std::vector<Unit> units)
    : complex_(complex), m_(m), n_(n), ell_(ell), p_(p), units_(std::move(units)) {
    for (std::size_t i = 0; i < units_.size(); ++i)
        if (!index_.emplace(units_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("QlocSpace: repeated basis element");
}

Operation QlocSpace::element(std::size_t i) const {
    const auto& [in, out] = units_.at(i);
    return Operation::matrix_unit(complex_, in, out);
}

std::optional<int> QlocSpace::index_of(const Tuple& in, const Tuple& out) const {
    auto it = index_.find({in, out});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

void tuples_of(int k, const std::vector<CellIndex>& cells, Tuple& cur, std::vector<Tuple>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (auto c : cells) {
        cur.push_back(c);
        tuples_of(k, cells, cur, out);
        cur.pop_back();
    }
}

}  // namespace

QlocSpace qloc_basis(int n_cells, int m, int n, int ell, int p) {
    if (ell < 0) throw std::invalid_argument("qloc_basis: ell must be non-negative");
    if (m < 1 || n < 1) throw std::invalid_argument("qloc_basis: arities must be positive");
    const CircleComplex cx(n_cells);
    std::vector<QlocSpace::Unit> units;
    if (p < -m || p > n) return QlocSpace(cx, m, n, ell, p, {});

    const auto cells = cx.cells();
    std::vector<Tuple> inputs;
    Tuple cur;
    tuples_of(m, cells, cur, inputs);
    for (const auto& in : inputs) {
        std::vector<CellIndex> near;
        for (auto y : cells) {
            bool ok = true;
            for (auto x : in) ok = ok && cx.distance(x, y) <= ell;
            if (ok) near.push_back(y);
        }
        const int need = p + total_degree(in).value;
        if (need < 0 || need > n) continue;
        std::vector<Tuple> outs;
        tuples_of(n, near, cur, outs);
        for (auto& out : outs)
            if (total_degree(out).value == need) units.emplace_back(in, std::move(out));
    }
    return QlocSpace(cx, m, n, ell, p, std::move(units));
}

std::vector<SparseRow> differential_rows(const QlocSpace& src, const QlocSpace& dst) {
    if (dst.degree() != src.degree() + 1 || dst.m() != src.m() || dst.n() != src.n())
        throw std::invalid_argument("differential_rows: spaces are not consecutive");
    std::vector<SparseRow> rows;
    rows.reserve(src.size());
    const Degree p(src.degree());
    for (const auto& [in, out] : src.units()) {
        std::vector<std::pair<int, Rat>> terms;
        for_each_d_term(src.complex(), p, in, out, Rat(1), [&](const Tuple& i, const Tuple& o, const Rat& r) {
            auto idx = dst.index_of(i, o);
            if (!idx)
                throw VerificationError("quasilocal subspace is not closed under D",
                                        src.complex().name(in) + " -> " + src.complex().name(out));
            terms.emplace_back(*idx, r);
        });
        rows.push_back(normalize_row(std::move(terms)));
    }
    return rows;
}

bool d_squared_vanishes(const QlocSpace& a, const QlocSpace& b, const QlocSpace& c) {
    const auto ab = differential_rows(a, b);
    const auto bc = differential_rows(b, c);
    for (const auto& row : ab) {
        std::vector<std::pair<int, Rat>> acc;
        for (const auto& [j, v] : row)
            for (const auto& [k, w] : bc[static_cast<std::size_t>(j)]) acc.emplace_back(k, v * w);
        if (!normalize_row(std::move(acc)).empty()) return false;
    }
    return true;
}

QlocCohomology cohomology_dims(int n_cells, int m, int n, int ell) {
    QlocCohomology res;
    std::map<int, QlocSpace> spaces;
    for (int p = -m - 1; p <= n + 1; ++p) spaces.emplace(p, qloc_basis(n_cells, m, n, ell, p));
    for (int p = -m; p <= n; ++p) {
        const auto& src = spaces.at(p);
        const auto& dst = spaces.at(p + 1);
        res.sizes[p] = src.size();
        res.ranks[p] = src.size() ? sparse_rank(static_cast<int>(dst.size()), differential_rows(src, dst)) : 0;
    }
    res.ranks[-m - 1] = 0;
    for (int p = -m; p <= n; ++p)
        res.dims[p] = static_cast<int>(res.sizes[p] - res.ranks[p] - res.ranks[p - 1]);
    res.ranks.erase(-m - 1);
    return res;
}

std::map<int, int> expected_qloc_dims(int m, int n) {
    std::map<int, int> d;
    for (int p = -m; p <= n; ++p) d[p] = (p == n - 1 || p == n) ? 1 : 0;
    return d;
}

BreakdownResult breakdown_sweep(int n_cells, int m, int n, int max_ell) {
    BreakdownResult res;
    const auto expected = expected_qloc_dims(m, n);
    for (int ell = 1; ell <= max_ell; ++ell) {
        auto dims = cohomology_dims(n_cells, m, n, ell).dims;
        if (!res.first_deviation && dims != expected) res.first_deviation = ell;
        res.sweep.emplace_back(ell, std::move(dims));
    }
    return res;
}

}  // namespace qfrob
