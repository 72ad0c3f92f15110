#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace gafdpp {

using Complex = std::complex<double>;

inline bool in_unit_disc(Complex z) { return std::abs(z) < 1.0; }

inline void require_in_disc(Complex z, const char* what) {
    if (!in_unit_disc(z)) throw std::domain_error(std::string(what) + ": point outside the open unit disc");
}

/// Disc automorphism sending q to 0:  phi_q(z) = (z - q) / (1 - conj(q) z).
///
/// Note on orientation: some references write (z - q)/(1 - z conj(q)); the two
/// differ by conjugation composed with a unimodular factor, so their moduli
/// agree.  Everything in this library consumes only |phi_q|.
Complex blaschke(Complex q, Complex z);

/// |blaschke(z, w)| -- the pseudo-hyperbolic distance.
double pseudo_dist(Complex z, Complex w);

/// Hyperbolic distance in the curvature -1 normalization (metric 2|dz|/(1-|z|^2)):
/// d(z,w) = 2 artanh |phi_z(w)|, so d(0,t) = log((1+t)/(1-t)).
double hyp_dist(Complex z, Complex w);

/// Lobachevskian ball D(q,R).  As a Euclidean set it is a disc with shifted
/// center; with rho = tanh(R/2),
///   euclid_center = q (1-rho^2) / (1 - rho^2 |q|^2)
///   euclid_radius = rho (1-|q|^2) / (1 - rho^2 |q|^2)
struct HyperbolicBall {
    Complex center;
    double radius_hyp = 0.0;
    Complex euclid_center;
    double euclid_radius = 0.0;

    bool contains(Complex z) const { return std::abs(z - euclid_center) < euclid_radius; }
    double outer_extent() const { return std::abs(euclid_center) + euclid_radius; }
};

HyperbolicBall ball(Complex q, double R);

struct DiscRegion {
    Complex center;
    double radius = 0.0;
};

struct AnnularSector {
    double r_inner = 0.0;
    double r_outer = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
};

using Region = std::variant<DiscRegion, AnnularSector>;

enum class Measure {
    lebesgue,    // dA
    hyperbolic,  // dA / (pi (1-|z|^2)^2)
};

/// Tensor-product quadrature nodes/weights on a region strictly inside the
/// unit disc: Gauss-Legendre radial x uniform angular, with the measure
/// density folded into the weights.
struct QuadratureGrid {
    std::vector<Complex> nodes;
    std::vector<double> weights;
    Region region;
    Measure measure = Measure::hyperbolic;
    int n_radial = 0;
    int n_angular = 0;

    std::size_t size() const { return nodes.size(); }
    double total_weight() const;
};

QuadratureGrid disc_quadrature(const Region& region, int n_radial, int n_angular, Measure measure);

inline QuadratureGrid hyperbolic_quadrature(const Region& region, int n_radial, int n_angular) {
    return disc_quadrature(region, n_radial, n_angular, Measure::hyperbolic);
}

/// Normalized hyperbolic area of a centred disc, int_{|z|<r} dA/(pi(1-|z|^2)^2).
inline double hyperbolic_disc_mass(double r) { return r * r / (1.0 - r * r); }

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Integrate f dA over the Euclidean disc (center, radius) with a polar grid:
/// radial Gauss-Legendre on geometrically refined panels toward the rim
/// (integrands here peak near the rim when the disc sits close to the unit
/// circle), uniform angular.
double integrate_disc(Complex center, double radius, const std::function<double(Complex)>& f,
                      int n_panels = 10, int n_gauss = 24, int n_angular = 512);

}  // namespace gafdpp
