#include "qfrob/derham.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "qfrob/simd/kernels.hpp"

namespace qfrob {

namespace {

constexpr double kGLNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
constexpr double kGLWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                  0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                  0.2223810344533745, 0.1012285362903763};

template <typename Fn>
double gauss_legendre(const Fn& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGLWeights[i] * f(mid + half * kGLNodes[i]);
    return s * half;
}

}  // namespace

Grid1D::Grid1D(double step, int half_count) : h_(step), k_(half_count) {
    if (!(step > 0.0) || half_count < 1) throw std::invalid_argument("Grid1D: need h > 0 and K >= 1");
}

Grid1D Grid1D::for_epsilon(double epsilon, int step_div) {
    if (!(epsilon > 0.0) || step_div < 1) throw std::invalid_argument("Grid1D: need epsilon > 0 and step_div >= 1");
    const double h = epsilon / step_div;
    return Grid1D(h, 3 * step_div);
}

std::string_view bump_shape_name(BumpShape s) { return s == BumpShape::steep ? "steep" : "mollifier"; }

Profile bump_profile(double epsilon, const Grid1D& grid, BumpShape shape) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("bump_profile: epsilon must be positive");
    if (grid.step() > epsilon / 200.0 * (1.0 + 1e-12))
        throw std::invalid_argument("bump_profile: grid does not resolve epsilon (need h <= epsilon/200)");
    if (grid.half_width() < 3.0 * epsilon * (1.0 - 1e-12))
        throw std::invalid_argument("bump_profile: grid half-width below 3 epsilon");
    const double a = shape == BumpShape::steep ? 4.0 : 1.0;
    auto raw = [epsilon, a](double x) {
        const double t = x / epsilon;
        return std::abs(t) < 1.0 ? std::exp(-a / (1.0 - t * t)) : 0.0;
    };
    std::vector<double> v(static_cast<std::size_t>(grid.samples()));
    for (int i = 0; i < grid.samples(); ++i) v[static_cast<std::size_t>(i)] = raw(grid.x(i));
    // endpoints vanish, so the trapezoid sum is h·Σ
    const double z = grid.step() * simd::sum(v.data(), v.size());
    for (auto& x : v) x /= z;
    return Profile{grid, epsilon, std::move(v), [raw, z](double x) { return raw(x) / z; }};
}

Profile scaled(const Profile& p, double c) {
    Profile out = p;
    for (auto& x : out.values) x *= c;
    out.fn = [f = p.fn, c](double x) { return c * f(x); };
    return out;
}

Profile primitive(const Profile& phi) {
    const Grid1D& g = phi.grid;
    const double h = g.step();
    auto cum = std::make_shared<std::vector<double>>(static_cast<std::size_t>(g.samples()), 0.0);
    for (int i = 1; i < g.samples(); ++i)
        (*cum)[static_cast<std::size_t>(i)] =
            (*cum)[static_cast<std::size_t>(i - 1)] + gauss_legendre(phi.fn, g.x(i - 1), g.x(i));
    auto fn = [cum, f = phi.fn, g, h](double x) {
        if (x <= g.x(0)) return 0.0;
        if (x >= g.x(g.samples() - 1)) return cum->back();
        const int k = std::min(static_cast<int>(std::floor((x - g.x(0)) / h)), g.samples() - 2);
        return (*cum)[static_cast<std::size_t>(k)] + gauss_legendre(f, g.x(k), x);
    };
    return Profile{g, phi.epsilon, *cum, fn};
}

Moments moment_checks(const Profile& phi, const Profile& F) {
    const double h = phi.grid.step();
    std::vector<double> f2(F.values.size());
    for (std::size_t i = 0; i < f2.size(); ++i) f2[i] = F.values[i] * F.values[i];
    const std::size_t n = phi.values.size();
    return {h * simd::dot(phi.values.data(), F.values.data(), n), h * simd::dot(phi.values.data(), f2.data(), n)};
}

UIntegrals u_integrals(double y, const Profile& phi, const Profile& F) {
    if (!(std::abs(y) < phi.epsilon)) throw std::invalid_argument("u_integrals: need |y| < epsilon");
    const Grid1D& g = phi.grid;
    const double h = g.step();
    const std::size_t n = phi.values.size();
    std::vector<double> f_shift(n), phi_shift(n);
    for (int i = 0; i < g.samples(); ++i) {
        f_shift[static_cast<std::size_t>(i)] = F(y + g.x(i));
        phi_shift[static_cast<std::size_t>(i)] = phi(y + g.x(i));
    }
    const double a = h * (simd::dot(phi.values.data(), f_shift.data(), n) +
                          simd::dot(F.values.data(), phi_shift.data(), n));
    const double b = -h * simd::dot(phi.values.data(), F.values.data(), n);
    double c = 0.0;
    auto shifted = [&phi, y](double u) { return phi(y + u); };
    for (int k = 0; k < g.half_count(); ++k) c += gauss_legendre(shifted, k * h, (k + 1) * h);
    return {a, b, -c};
}

MuIntegrals mu_total_and_halfplane(const Profile& phi, const Profile& F) {
    const Grid1D& g = phi.grid;
    const double h = g.step();
    double total = 0.0, half = 0.0;
    for (int i = 0; i < g.samples(); ++i) {
        const double y = g.x(i);
        const double p = phi.values[static_cast<std::size_t>(i)];
        if (p == 0.0 || !(std::abs(y) < phi.epsilon)) continue;
        const auto u = u_integrals(y, phi, F);
        const double s = u.a + u.b + u.c;
        total += p * s;
        half += F.values[static_cast<std::size_t>(i)] * p * s;
    }
    return {-h * total, -h * half};
}

MuDirect mu_direct(const Profile& phi, const Profile& F) {
    const Grid1D& g = phi.grid;
    const double h = g.step();
    const double eps = phi.epsilon;
    // midpoints u_j = (j + 1/2)h covering (-ε, ε)
    const int J = static_cast<int>(std::ceil(eps / h)) + 1;
    const std::size_t nu = static_cast<std::size_t>(2 * J);
    std::vector<double> u(nu), P(nu), Q(nu), R(nu);
    for (std::size_t j = 0; j < nu; ++j) {
        u[j] = (static_cast<double>(j) - J + 0.5) * h;
        const double fu = F(u[j]);
        const double theta = u[j] > 0.0 ? 1.0 : 0.0;
        P[j] = phi(u[j]);
        Q[j] = P[j] * fu;
        R[j] = fu - theta;
    }
    // x-rows where φ(x - u) can be nonzero for some u in range
    std::vector<int> rows;
    for (int i = 0; i < g.samples(); ++i)
        if (std::abs(g.x(i)) < 2.0 * eps + 2.0 * h) rows.push_back(i);
    std::vector<std::vector<double>> ax(rows.size(), std::vector<double>(nu));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < nu; ++j) ax[r][j] = phi(g.x(rows[r]) - u[j]);

    double half = 0.0, full = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t s = 0; s < rows.size(); ++s) {
            const int ix = rows[r], iy = rows[s];
            if (std::abs(ix - iy) * h >= 2.0 * eps + h) continue;
            const double fy = F.values[static_cast<std::size_t>(iy)];
            const double py = phi.values[static_cast<std::size_t>(iy)];
            const double* a = ax[r].data();
            const double* b = ax[s].data();
            const double m = h * (fy * simd::dot3(a, b, P.data(), nu) - simd::dot3(a, b, Q.data(), nu) +
                                  py * simd::dot3(a, b, R.data(), nu));
            full += m;
            if (iy > ix)
                half += m;
            else if (iy == ix)
                half += 0.5 * m;
        }
    }
    return {-h * h * half, -h * h * full};
}

double mu_direct_halfplane(const Profile& phi, const Profile& F) { return mu_direct(phi, F).half; }

}  // namespace qfrob
