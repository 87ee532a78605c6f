#include "qfrob/circle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qfrob/errors.hpp"

namespace qfrob {

Degree total_degree(const Tuple& t) {
    int d = 0;
    for (auto c : t) d += c.degree().value;
    return Degree(d);
}

Rat Cochain::coeff(CellIndex c) const {
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

Cochain& Cochain::add(CellIndex c, const Rat& r) {
    if (c.degree() != degree_)
        throw std::invalid_argument("Cochain::add: cell parity does not match cochain degree");
    if (r.is_zero()) return *this;
    auto [it, inserted] = coeffs_.try_emplace(c, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

CircleComplex::CircleComplex(int n_cells) : n_(n_cells) {
    if (n_cells < 3) throw std::invalid_argument("CircleComplex: need at least 3 cells");
}

std::vector<CellIndex> CircleComplex::cells() const {
    std::vector<CellIndex> out;
    out.reserve(static_cast<std::size_t>(2 * n_));
    for (int d = 0; d < 2 * n_; ++d) out.push_back({d});
    return out;
}

std::vector<CellIndex> CircleComplex::cells_of_degree(int degree) const {
    std::vector<CellIndex> out;
    if (degree != 0 && degree != 1) return out;
    for (int x = 0; x < n_; ++x) out.push_back({2 * x + degree});
    return out;
}

std::vector<BoundaryTerm> CircleComplex::boundary(CellIndex c) const {
    if (c.is_edge()) return {};
    return {{wrap(c.doubled - 1), +1}, {wrap(c.doubled + 1), -1}};
}

std::vector<BoundaryTerm> CircleComplex::coboundary_sources(CellIndex c) const {
    if (c.is_vertex()) return {};
    // g_{x-1/2} appears in d f_x with +1, g_{x+1/2} in d f_x with -1.
    return {{wrap(c.doubled + 1), +1}, {wrap(c.doubled - 1), -1}};
}

Cochain CircleComplex::differential(const Cochain& c) const {
    Cochain out(c.degree() + Degree(1));
    for (const auto& [cell, r] : c.coeffs())
        for (const auto& t : boundary(cell)) out.add(t.target, r * Rat(t.sign));
    return out;
}

CohClass CircleComplex::cohomology_class(const Cochain& c) const {
    if (!is_closed(c)) throw ContractError("cohomology_class: cochain is not closed");
    if (c.degree() == Degree(0)) {
        // closed 0-cochains are constant
        return {c.coeff(vertex(0)), Rat(0)};
    }
    if (c.degree() == Degree(1)) {
        Rat s;
        for (const auto& [cell, r] : c.coeffs()) s += r;
        return {Rat(0), s};
    }
    return {Rat(0), Rat(0)};
}

bool CircleComplex::is_exact(const Cochain& c) const {
    auto cls = cohomology_class(c);
    return cls.h0.is_zero() && cls.h1.is_zero();
}

Cochain CircleComplex::unit() const {
    Cochain out(Degree(0));
    for (int x = 0; x < n_; ++x) out.add(vertex(x), Rat(1));
    return out;
}

Cochain CircleComplex::volume() const {
    Cochain out(Degree(1));
    out.add(edge(0), Rat(1));
    return out;
}

int CircleComplex::distance(CellIndex a, CellIndex b) const {
    const int period = 2 * n_;
    auto circ = [period](int p, int q) {
        int d = std::abs(p - q) % period;
        return std::min(d, period - d);
    };
    auto points = [](CellIndex c, int* out) {
        if (c.is_vertex()) {
            out[0] = c.doubled;
            return 1;
        }
        out[0] = c.doubled - 1;
        out[1] = c.doubled;
        out[2] = c.doubled + 1;
        return 3;
    };
    int pa[3], pb[3];
    int na = points(a, pa), nb = points(b, pb);
    int worst = 0;
    for (int i = 0; i < na; ++i) {
        int best = period;
        for (int j = 0; j < nb; ++j) best = std::min(best, circ(pa[i], pb[j]));
        worst = std::max(worst, best);
    }
    return worst / 2;
}

std::string CircleComplex::name(CellIndex c) const {
    if (c.is_vertex()) return "f" + std::to_string(c.doubled / 2);
    return "g" + std::to_string(c.doubled) + "/2";
}

std::string CircleComplex::name(const Tuple& t) const {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += "⊗";
        s += name(t[i]);
    }
    return s;
}

}  // namespace qfrob
