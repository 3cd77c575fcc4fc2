#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "metric_space.hpp"

namespace c3 {

enum class Label : int { Stratum2 = 2, Slim1 = 12, Edge1 = 11, Generic1 = 10, Stratum0 = 0 };

const char* label_name(Label l);
Label label_from_name(const std::string& s);

struct GroundTruth {
    std::vector<Label> labels;
    std::vector<double> kappa_min;           // analytic curvature lower bound per point
    std::map<std::string, double> regions;   // named region areas / fractions
    std::string expected_certificate;
    std::map<std::string, double> params;    // generator parameters echoed

    void save(const std::string& path) const;
    static GroundTruth load(const std::string& path);
};

struct GeneratedSample {
    SampledSpace space;
    GroundTruth truth;
};

/// Flat T^3 = R^3 / (eps1 Z x eps2 Z x L Z), uniform sample, intrinsic
/// distances on the k-NN edges. All points slim with T^2 fiber.
GeneratedSample gen_flat_torus3(double eps1, double eps2, double L, std::size_t n,
                                std::uint64_t seed, int knn = 10);

/// Boundary of the eps-neighborhood of a length-L segment in R^4: a 3-sphere
/// made of an eps-S^2 tube with two round caps. Tube slim (S^2 fiber),
/// caps 0-stratum.
GeneratedSample gen_capsule(double eps, double L, std::size_t n, std::uint64_t seed,
                            int knn = 10);

/// Boundary of the s-neighborhood in H^4 of a compact convex polygon P in H^2.
/// Vertices are hyperboloid-model points (x, y, z), x^2 + y^2 - z^2 = -1, z > 0.
/// Face points 2-stratum, edge collar Edge1, vertex collar 0-stratum.
/// `edge_collar` / `vertex_collar` are the label collar widths in units of s.
GeneratedSample gen_polygon_h4(double s, const std::vector<std::array<double, 3>>& vertices,
                               std::size_t n, std::uint64_t seed, int knn = 10,
                               double edge_collar = 1.5, double vertex_collar = 3.0);

/// Regular hyperbolic polygon with the given number of sides and side length,
/// centered at the hyperboloid basepoint. Side length must be below the
/// regular-polygon bound (side < 1.76 for squares).
std::vector<std::array<double, 3>> regular_h2_polygon(int sides, double side_len);

// --- exact H^2 / H^4 helpers (hyperboloid model), exposed for oracle tests ---
namespace hyp {
double dot2(const std::array<double, 3>& a, const std::array<double, 3>& b);     // H^2 Minkowski
double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b);
std::array<double, 3> normalize_space2(std::array<double, 3> v);
std::array<double, 3> normalize_point2(std::array<double, 3> p);
std::array<double, 3> cross2(const std::array<double, 3>& a, const std::array<double, 3>& b);
std::array<double, 3> tangent2(const std::array<double, 3>& a, const std::array<double, 3>& b);
std::array<double, 3> geo_exp2(const std::array<double, 3>& p, const std::array<double, 3>& v,
                               double t);
double dist_to_segment2(const std::array<double, 3>& q, const std::array<double, 3>& a,
                        const std::array<double, 3>& b);
bool inside_convex2(const std::array<double, 3>& q,
                    const std::vector<std::array<double, 3>>& verts);
double dot4(const std::array<double, 5>& a, const std::array<double, 5>& b);     // H^4 Minkowski
double dist4(const std::array<double, 5>& a, const std::array<double, 5>& b);

struct PolygonAreas {
    double face = 0.0, edge = 0.0, vertex = 0.0;
    double polygon_area = 0.0;
    double total() const { return face + edge + vertex; }
};
/// Exact areas of the three fiber regions of the boundary of N_s(P).
PolygonAreas polygon_region_areas(double s, const std::vector<std::array<double, 3>>& verts);
} // namespace hyp

} // namespace c3
