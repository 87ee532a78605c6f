#include "qfrob/random_ops.hpp"

#include <algorithm>
#include <numeric>

namespace qfrob {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CellIndex random_cell(const CircleComplex& cx, Rng& rng) { return {uniform(rng, 0, cx.basis_size() - 1)}; }

// A random output tuple of the given total degree, every cell within `radius` of
// every input (unbounded if radius is empty); nullopt if rejection sampling gives up.
std::optional<Tuple> random_outputs(const CircleComplex& cx, const Tuple& in, int n, int degree,
                                    std::optional<int> radius, Rng& rng) {
    if (degree < 0 || degree > n) return std::nullopt;
    std::vector<CellIndex> vertices, edges;
    for (auto y : cx.cells()) {
        bool ok = true;
        if (radius)
            for (auto x : in) ok = ok && cx.distance(x, y) <= *radius;
        if (ok) (y.is_vertex() ? vertices : edges).push_back(y);
    }
    if ((degree > 0 && edges.empty()) || (degree < n && vertices.empty())) return std::nullopt;
    std::vector<int> slots(static_cast<std::size_t>(n));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    Tuple out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const auto& pool = k < degree ? edges : vertices;
        out[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] =
            pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    }
    return out;
}

Tuple random_local_inputs(const CircleComplex& cx, int m, std::optional<int> radius, Rng& rng) {
    Tuple in;
    const CellIndex centre = random_cell(cx, rng);
    for (int i = 0; i < m; ++i) {
        if (!radius) {
            in.push_back(random_cell(cx, rng));
            continue;
        }
        const int spread = 2 * *radius + 1;
        in.push_back(cx.wrap(centre.doubled + uniform(rng, -spread, spread)));
    }
    return in;
}

}  // namespace

Rat random_coeff(Rng& rng) {
    int v = uniform(rng, 1, 3);
    return Rat(uniform(rng, 0, 1) ? v : -v);
}

Operation random_operation(const CircleComplex& cx, int m, int n, Degree p, std::size_t entries, Rng& rng,
                           std::optional<int> max_radius) {
    Operation op(cx, m, n, p);
    for (std::size_t attempt = 0; attempt < 40 * entries + 40 && op.nnz() < entries; ++attempt) {
        const Tuple in = random_local_inputs(cx, m, max_radius, rng);
        auto out = random_outputs(cx, in, n, p.value + total_degree(in).value, max_radius, rng);
        if (out) op.add_entry(in, *out, random_coeff(rng));
    }
    return op;
}

ComposablePair random_composable_pair(const CircleComplex& cx, int max_arity, int max_radius, Rng& rng) {
    for (;;) {
        const int qm = uniform(rng, 1, max_arity), qn = uniform(rng, 1, max_arity);
        const int pm = uniform(rng, 1, max_arity), pn = uniform(rng, 1, max_arity);
        const int rq = uniform(rng, 0, max_radius), rp = uniform(rng, 0, max_radius);
        const Degree qp(uniform(rng, -qm, qn)), pp(uniform(rng, -pm, pn));
        Operation q = random_operation(cx, qm, qn, qp, static_cast<std::size_t>(uniform(rng, 1, 4)), rng, rq);
        if (q.is_zero()) continue;
        const Wire w{uniform(rng, 0, qn - 1), uniform(rng, 0, pm - 1)};
        // seed P with entries whose wired input is an actual output cell of Q
        std::vector<CellIndex> fed;
        for (const auto& [in, row] : q.entries())
            for (const auto& [out, c] : row) fed.push_back(out[static_cast<std::size_t>(w.from_inner)]);
        Operation pop(cx, pm, pn, pp);
        for (int attempt = 0; attempt < 60 && pop.nnz() < 3; ++attempt) {
            const CellIndex anchor = fed[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fed.size()) - 1))];
            Tuple in;
            for (int i = 0; i < pm; ++i)
                in.push_back(i == w.to_outer ? anchor
                                             : cx.wrap(anchor.doubled + uniform(rng, -2 * rp - 1, 2 * rp + 1)));
            auto out = random_outputs(cx, in, pn, pp.value + total_degree(in).value, rp, rng);
            if (out) pop.add_entry(in, *out, random_coeff(rng));
        }
        if (pop.is_zero()) continue;
        Operation composite = compose(pop, q, {w});
        if (composite.is_zero()) continue;
        return {std::move(pop), std::move(q), w};
    }
}

Permutation random_permutation(std::size_t k, Rng& rng) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

}  // namespace qfrob
