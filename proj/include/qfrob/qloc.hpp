#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qfrob/operation.hpp"
#include "qfrob/sparse_rank.hpp"

namespace qfrob {

/// The matrix units of ℓ-quasilocal m-to-n operations of degree p.
class QlocSpace {
public:
    using Unit = std::pair<Tuple, Tuple>;

    QlocSpace(const CircleComplex& complex, int m, int n, int ell, int p, std::vector<Unit> units);

    const CircleComplex& complex() const { return complex_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int ell() const { return ell_; }
    int degree() const { return p_; }
    std::size_t size() const { return units_.size(); }
    const std::vector<Unit>& units() const { return units_; }

    /// The i-th basis element as an operation.
    Operation element(std::size_t i) const;
    std::optional<int> index_of(const Tuple& in, const Tuple& out) const;

private:
    CircleComplex complex_;
    int m_, n_, ell_, p_;
    std::vector<Unit> units_;
    std::map<Unit, int> index_;
};

/// Throws std::invalid_argument if N < 3, ℓ < 0 or m, n < 1. Degrees outside
/// [-m, n] give an empty space.
QlocSpace qloc_basis(int n_cells, int m, int n, int ell, int p);

/// Rows of D: qloc(p) -> qloc(p+1), one per source unit, indexed by target units.
/// Throws VerificationError if D leaves the quasilocal subspace.
std::vector<SparseRow> differential_rows(const QlocSpace& src, const QlocSpace& dst);

/// True iff the product of the differential matrices out of degrees p and p+1 vanishes.
bool d_squared_vanishes(const QlocSpace& a, const QlocSpace& b, const QlocSpace& c);

struct QlocCohomology {
    std::map<int, int> dims;        // degree -> dim H
    std::map<int, std::size_t> sizes;  // degree -> number of basis units
    std::map<int, std::size_t> ranks;  // degree p -> rank of D out of p
};

QlocCohomology cohomology_dims(int n_cells, int m, int n, int ell);

/// {n-1: 1, n: 1, others 0} over degrees -m..n.
std::map<int, int> expected_qloc_dims(int m, int n);

struct BreakdownResult {
    std::optional<int> first_deviation;
    std::vector<std::pair<int, std::map<int, int>>> sweep;  // (ℓ, dims)
};

/// Sweeps ℓ = 1..max_ell and reports the first ℓ whose dims differ from the expected ones.
BreakdownResult breakdown_sweep(int n_cells, int m, int n, int max_ell);

}  // namespace qfrob
