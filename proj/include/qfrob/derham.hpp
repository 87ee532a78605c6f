#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace qfrob {

/// Uniform grid x_k = k·h, k = -K..K, on [-L, L] with L = K·h.
class Grid1D {
public:
    /// Throws std::invalid_argument unless h > 0 and K >= 1.
    Grid1D(double step, int half_count);
    /// h = ε / step_div and the smallest K with K·h >= 3ε.
    static Grid1D for_epsilon(double epsilon, int step_div);

    double step() const { return h_; }
    int half_count() const { return k_; }
    double half_width() const { return h_ * k_; }
    int samples() const { return 2 * k_ + 1; }
    double x(int i) const { return (i - k_) * h_; }

private:
    double h_;
    int k_;
};

enum class BumpShape {
    mollifier,  // exp(-1/(1-t²))
    steep,      // exp(-4/(1-t²))
};
std::string_view bump_shape_name(BumpShape s);

/// A scalar function sampled on a grid, together with the function itself so
/// quadrature can evaluate it between grid points.
struct Profile {
    Grid1D grid;
    double epsilon;  // support radius
    std::vector<double> values;
    std::function<double(double)> fn;

    double operator()(double x) const { return fn(x); }
};

/// Smooth even bump supported in (-ε, ε), normalized so its trapezoid sum is 1.
/// Throws std::invalid_argument if ε <= 0, the grid has h > ε/200, or L < 3ε.
Profile bump_profile(double epsilon, const Grid1D& grid, BumpShape shape = BumpShape::mollifier);

/// c·φ.
Profile scaled(const Profile& p, double c);

/// F(x) = ∫_{-L}^{x} φ, computed cell by cell with 8-point Gauss–Legendre on φ.fn.
Profile primitive(const Profile& phi);

struct Moments {
    double m1;  // ∫ φF
    double m2;  // ∫ φF²
};
Moments moment_checks(const Profile& phi, const Profile& F);

struct UIntegrals {
    double a;  // ∫ [φ(u)F(y+u) + F(u)φ(y+u)] du
    double b;  // -∫ φF
    double c;  // -∫_{u>=0} φ(y+u) du
};
/// Throws std::invalid_argument unless |y| < ε.
UIntegrals u_integrals(double y, const Profile& phi, const Profile& F);

struct MuIntegrals {
    double total;  // -∫ φ(y)(A + B + C(y)) dy
    double half;   // -∫ F(y)φ(y)(A + B + C(y)) dy
};
MuIntegrals mu_total_and_halfplane(const Profile& phi, const Profile& F);

struct MuDirect {
    double half;  // over y >= x
    double full;
};
/// Quadrature of the unreduced two-form coefficient
///   m(x,y) = ∫ φ(x-u)φ(y-u)[φ(u)(F(y)-F(u)) + φ(y)(F(u)-Θ(u))] du
/// on a midpoint u-grid (so Θ is never evaluated at 0), integrated over the
/// half plane and the full plane with weight -1.
MuDirect mu_direct(const Profile& phi, const Profile& F);
double mu_direct_halfplane(const Profile& phi, const Profile& F);

}  // namespace qfrob
