#include "gafdpp/geom.hpp"

#include <cmath>
#include <numbers>

namespace gafdpp {

Complex blaschke(Complex q, Complex z) {
    require_in_disc(q, "blaschke");
    require_in_disc(z, "blaschke");
    return (z - q) / (1.0 - std::conj(q) * z);
}

double pseudo_dist(Complex z, Complex w) { return std::abs(blaschke(z, w)); }

double hyp_dist(Complex z, Complex w) {
    const double m = pseudo_dist(z, w);
    return std::log((1.0 + m) / (1.0 - m));
}

HyperbolicBall ball(Complex q, double R) {
    require_in_disc(q, "ball");
    if (R < 0.0) throw std::domain_error("ball: negative hyperbolic radius");
    const double rho = std::tanh(R / 2.0);
    const double aq2 = std::norm(q);
    const double denom = 1.0 - rho * rho * aq2;
    HyperbolicBall b;
    b.center = q;
    b.radius_hyp = R;
    b.euclid_center = q * (1.0 - rho * rho) / denom;
    b.euclid_radius = rho * (1.0 - aq2) / denom;
    return b;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

double measure_density(Complex z, Measure m) {
    switch (m) {
        case Measure::lebesgue: return 1.0;
        case Measure::hyperbolic: {
            const double s = 1.0 - std::norm(z);
            return 1.0 / (std::numbers::pi * s * s);
        }
    }
    return 0.0;
}

void check_region(const Region& region) {
    if (const auto* d = std::get_if<DiscRegion>(&region)) {
        if (d->radius <= 0.0) throw std::domain_error("quadrature region: nonpositive radius");
        if (std::abs(d->center) + d->radius >= 1.0)
            throw std::domain_error("quadrature region touches the unit circle");
    } else {
        const auto& a = std::get<AnnularSector>(region);
        if (!(a.r_inner >= 0.0 && a.r_outer > a.r_inner))
            throw std::domain_error("quadrature region: bad annulus radii");
        if (a.r_outer >= 1.0) throw std::domain_error("quadrature region touches the unit circle");
        if (!(a.theta1 > a.theta0)) throw std::domain_error("quadrature region: empty angular range");
    }
}

}  // namespace

QuadratureGrid disc_quadrature(const Region& region, int n_radial, int n_angular, Measure measure) {
    check_region(region);
    if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("disc_quadrature: grid sizes must be >= 1");

    Complex center{0.0, 0.0};
    double t_lo = 0.0, t_hi = 0.0, th_lo = 0.0, th_hi = 2.0 * std::numbers::pi;
    if (const auto* d = std::get_if<DiscRegion>(&region)) {
        center = d->center;
        t_hi = d->radius;
    } else {
        const auto& a = std::get<AnnularSector>(region);
        t_lo = a.r_inner;
        t_hi = a.r_outer;
        th_lo = a.theta0;
        th_hi = a.theta1;
    }

    std::vector<double> gx, gw;
    gauss_legendre(n_radial, gx, gw);

    QuadratureGrid grid;
    grid.region = region;
    grid.measure = measure;
    grid.n_radial = n_radial;
    grid.n_angular = n_angular;
    grid.nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
    grid.weights.reserve(static_cast<std::size_t>(n_radial) * n_angular);

    const double dth = (th_hi - th_lo) / n_angular;
    for (int i = 0; i < n_radial; ++i) {
        const double t = t_lo + 0.5 * (t_hi - t_lo) * (gx[i] + 1.0);
        const double wt = 0.5 * (t_hi - t_lo) * gw[i] * t * dth;  // Euclidean area element
        for (int j = 0; j < n_angular; ++j) {
            const double th = th_lo + dth * j;
            const Complex z = center + t * Complex{std::cos(th), std::sin(th)};
            grid.nodes.push_back(z);
            grid.weights.push_back(wt * measure_density(z, measure));
        }
    }
    return grid;
}

double QuadratureGrid::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

double integrate_disc(Complex center, double radius, const std::function<double(Complex)>& f,
                      int n_panels, int n_gauss, int n_angular) {
    if (radius <= 0.0) throw std::domain_error("integrate_disc: nonpositive radius");
    std::vector<double> gx, gw;
    gauss_legendre(n_gauss, gx, gw);

    std::vector<double> edges;
    edges.push_back(0.0);
    for (int j = 1; j < n_panels; ++j) edges.push_back(radius * (1.0 - std::pow(0.45, j)));
    edges.push_back(radius);

    const double dth = 2.0 * std::numbers::pi / n_angular;
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double lo = edges[p], hi = edges[p + 1];
        for (int i = 0; i < n_gauss; ++i) {
            const double t = lo + 0.5 * (hi - lo) * (gx[i] + 1.0);
            const double wt = 0.5 * (hi - lo) * gw[i] * t * dth;
            double ring = 0.0;
            for (int j = 0; j < n_angular; ++j) {
                const double th = dth * j;
                ring += f(center + t * Complex{std::cos(th), std::sin(th)});
            }
            total += wt * ring;
        }
    }
    return total;
}

}  // namespace gafdpp
