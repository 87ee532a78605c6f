#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/graded.hpp"
#include "qfrob/rational.hpp"

namespace qfrob {

/// A basis cell of the N-cell circle, addressed in doubled coordinates mod 2N:
/// even values 2x are the vertices f_x, odd values 2x+1 the edges g_{x+1/2}.
struct CellIndex {
    int doubled = 0;

    constexpr bool is_vertex() const { return (doubled & 1) == 0; }
    constexpr bool is_edge() const { return !is_vertex(); }
    constexpr Degree degree() const { return Degree(doubled & 1); }
    friend constexpr bool operator==(CellIndex, CellIndex) = default;
    friend constexpr auto operator<=>(CellIndex, CellIndex) = default;
};

using Tuple = std::vector<CellIndex>;

Degree total_degree(const Tuple& t);

/// Homogeneous cellular cochain; zero coefficients are never stored.
class Cochain {
public:
    explicit Cochain(Degree degree) : degree_(degree) {}

    Degree degree() const { return degree_; }
    const std::map<CellIndex, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(CellIndex c) const;

    /// Adds r·c. Throws std::invalid_argument if the cell's parity disagrees
    /// with the cochain's degree.
    Cochain& add(CellIndex c, const Rat& r);

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    Degree degree_;
    std::map<CellIndex, Rat> coeffs_;
};

/// A class in H^0 ⊕ H^1, coordinates against the unit and the volume class.
struct CohClass {
    Rat h0;
    Rat h1;
    friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// One boundary term d(cell) ∋ sign·target.
struct BoundaryTerm {
    CellIndex target;
    int sign;
};

/// Cellular cochains C^•(S^1) of the subdivision into N vertices and N edges.
class CircleComplex {
public:
    /// Throws std::invalid_argument for N < 3.
    explicit CircleComplex(int n_cells);

    int n() const { return n_; }
    int basis_size() const { return 2 * n_; }

    CellIndex vertex(int x) const { return {2 * mod(x, n_)}; }
    /// The edge g_{x+1/2} joining vertices x and x+1.
    CellIndex edge(int x) const { return {2 * mod(x, n_) + 1}; }
    CellIndex wrap(int doubled) const { return {mod(doubled, 2 * n_)}; }
    /// Rotation by `steps` vertices.
    CellIndex shift(CellIndex c, int steps) const { return wrap(c.doubled + 2 * steps); }

    std::vector<CellIndex> cells() const;
    std::vector<CellIndex> cells_of_degree(int degree) const;

    /// d on a basis cell: d f_x = g_{x-1/2} - g_{x+1/2}, d g = 0.
    std::vector<BoundaryTerm> boundary(CellIndex c) const;
    /// Cells c' with d c' ∋ sign·c (the transpose of `boundary`).
    std::vector<BoundaryTerm> coboundary_sources(CellIndex c) const;

    Cochain differential(const Cochain& c) const;
    bool is_closed(const Cochain& c) const { return differential(c).is_zero(); }

    /// Throws ContractError if c is not closed.
    CohClass cohomology_class(const Cochain& c) const;
    /// Throws ContractError if c is not closed.
    bool is_exact(const Cochain& c) const;

    /// Σ_x f_x, representing 1 ∈ H^0.
    Cochain unit() const;
    /// g_{1/2}, representing the volume class in H^1.
    Cochain volume() const;

    /// Non-symmetric cell distance: max over points of a of the circular
    /// distance to the nearest point of b, in vertex units.
    int distance(CellIndex a, CellIndex b) const;

    std::string name(CellIndex c) const;
    std::string name(const Tuple& t) const;

    friend bool operator==(const CircleComplex&, const CircleComplex&) = default;

private:
    static int mod(int a, int m) { return ((a % m) + m) % m; }
    int n_;
};

}  // namespace qfrob
