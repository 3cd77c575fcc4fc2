#include "generators.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "json.hpp"

namespace c3 {

using nlohmann::json;

const char* label_name(Label l) {
    switch (l) {
        case Label::Stratum2: return "stratum2";
        case Label::Slim1: return "slim1";
        case Label::Edge1: return "edge1";
        case Label::Generic1: return "generic1";
        case Label::Stratum0: return "stratum0";
    }
    return "?";
}

Label label_from_name(const std::string& s) {
    if (s == "stratum2") return Label::Stratum2;
    if (s == "slim1") return Label::Slim1;
    if (s == "edge1") return Label::Edge1;
    if (s == "generic1") return Label::Generic1;
    if (s == "stratum0") return Label::Stratum0;
    throw invalid_input("unknown stratum label: " + s);
}

void GroundTruth::save(const std::string& path) const {
    json j;
    j["labels"] = json::array();
    for (Label l : labels) j["labels"].push_back(label_name(l));
    j["kappa_min"] = kappa_min;
    j["regions"] = regions;
    j["expected_certificate"] = expected_certificate;
    j["params"] = params;
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

GroundTruth GroundTruth::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);
    json j = json::parse(in);
    GroundTruth gt;
    for (auto& l : j.at("labels")) gt.labels.push_back(label_from_name(l.get<std::string>()));
    gt.kappa_min = j.at("kappa_min").get<std::vector<double>>();
    if (j.contains("regions")) gt.regions = j["regions"].get<std::map<std::string, double>>();
    gt.expected_certificate = j.at("expected_certificate").get<std::string>();
    if (j.contains("params")) gt.params = j["params"].get<std::map<std::string, double>>();
    return gt;
}

namespace {

// Implementation-independent uniforms so that output files are byte-identical
// across standard libraries.
double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double gauss(std::mt19937_64& rng) {
    double u1 = u01(rng), u2 = u01(rng);
    while (u1 <= 1e-300) u1 = u01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::array<double, 3> unit_sphere2(std::mt19937_64& rng) {
    double x, y, z, n2;
    do {
        x = gauss(rng); y = gauss(rng); z = gauss(rng);
        n2 = x * x + y * y + z * z;
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    return {x * inv, y * inv, z * inv};
}

std::array<double, 4> unit_sphere3(std::mt19937_64& rng) {
    double v[4], n2;
    do {
        n2 = 0.0;
        for (double& c : v) { c = gauss(rng); n2 += c * c; }
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    return {v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv};
}

} // namespace

// ---------------------------------------------------------------------------
// flat 3-torus

GeneratedSample gen_flat_torus3(double eps1, double eps2, double L, std::size_t n,
                                std::uint64_t seed, int knn) {
    if (!(eps1 > 0.0) || !(eps2 > 0.0) || !(eps1 < L / 20.0) || !(eps2 < L / 20.0))
        throw invalid_input("gen_flat_torus3: need 0 < eps1, eps2 < L/20");
    if (n < 1000) throw invalid_input("gen_flat_torus3: need n >= 1000");

    std::mt19937_64 rng(seed);
    std::vector<std::array<double, 3>> pts(n);
    for (auto& p : pts) p = {eps1 * u01(rng), eps2 * u01(rng), L * u01(rng)};

    const double per[3] = {eps1, eps2, L};
    auto torus_dist = [&per](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        double s = 0.0;
        for (int d = 0; d < 3; ++d) {
            double t = std::abs(a[d] - b[d]);
            t = std::min(t, per[d] - t);
            s += t * t;
        }
        return std::sqrt(s);
    };

    std::size_t kk = std::min<std::size_t>(knn, n - 1);
    std::vector<std::vector<std::pair<int, double>>> nbr(n);
    parallel_for(n, [&](std::size_t i) {
        std::vector<std::pair<double, int>> cand(n);
        for (std::size_t j = 0; j < n; ++j) cand[j] = {torus_dist(pts[i], pts[j]), (int)j};
        cand[i].first = kInf;
        std::partial_sort(cand.begin(), cand.begin() + kk, cand.end());
        for (std::size_t t = 0; t < kk; ++t) nbr[i].push_back({cand[t].second, cand[t].first});
    });
    std::vector<std::tuple<int, int, double>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [j, d] : nbr[i]) edges.emplace_back((int)i, j, d);

    double vol = eps1 * eps2 * L;
    std::vector<double> weights(n, vol / double(n));

    // isometric flat embedding in R^6 (product of three round circles)
    std::vector<std::vector<double>> amb(n, std::vector<double>(6));
    for (std::size_t i = 0; i < n; ++i) {
        for (int d = 0; d < 3; ++d) {
            double r = per[d] / (2.0 * M_PI);
            double th = 2.0 * M_PI * pts[i][d] / per[d];
            amb[i][2 * d] = r * std::cos(th);
            amb[i][2 * d + 1] = r * std::sin(th);
        }
    }

    GeneratedSample out{SampledSpace::from_edges(n, edges, std::move(weights), std::move(amb)), {}};
    out.truth.labels.assign(n, Label::Slim1);
    out.truth.kappa_min.assign(n, 0.0);
    out.truth.regions["slim"] = vol;
    out.truth.expected_certificate = "graph_manifold:T2_bundle_over_S1";
    out.truth.params = {{"eps1", eps1}, {"eps2", eps2}, {"L", L},
                        {"n", double(n)}, {"seed", double(seed)}};
    return out;
}

// ---------------------------------------------------------------------------
// capsule: boundary of the eps-neighborhood of a segment in R^4

GeneratedSample gen_capsule(double eps, double L, std::size_t n, std::uint64_t seed, int knn) {
    if (!(eps > 0.0) || !(eps < L / 10.0))
        throw invalid_input("gen_capsule: eps too large (need 0 < eps < L/10)");
    if (n < 5000) throw invalid_input("gen_capsule: need n >= 5000");

    double area_tube = 4.0 * M_PI * eps * eps * L;      // eps*S^2 x [0,L]
    double area_cap = M_PI * M_PI * eps * eps * eps;    // half of S^3(eps)
    double area_total = area_tube + 2.0 * area_cap;

    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> pts;
    pts.reserve(n);
    std::vector<Label> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double pick = u01(rng) * area_total;
        if (pick < area_tube) {
            double t = L * u01(rng);
            auto v = unit_sphere2(rng);
            pts.push_back({t, eps * v[0], eps * v[1], eps * v[2]});
            labels.push_back(Label::Slim1);
        } else {
            bool left = pick < area_tube + area_cap;
            std::array<double, 4> u;
            do { u = unit_sphere3(rng); } while (left ? u[0] > 0.0 : u[0] < 0.0);
            double base = left ? 0.0 : L;
            pts.push_back({base + eps * u[0], eps * u[1], eps * u[2], eps * u[3]});
            labels.push_back(Label::Stratum0);
        }
    }

    std::vector<double> weights(n, area_total / double(n));
    GeneratedSample out{SampledSpace::from_point_cloud(pts, knn, std::move(weights)), {}};
    out.truth.labels = std::move(labels);
    out.truth.kappa_min.assign(n, 0.0);
    out.truth.regions = {{"tube", area_tube}, {"cap", 2.0 * area_cap}};
    out.truth.expected_certificate = "graph_manifold:S3";
    out.truth.params = {{"eps", eps}, {"L", L}, {"n", double(n)}, {"seed", double(seed)}};
    return out;
}

// ---------------------------------------------------------------------------
// hyperbolic helpers

namespace hyp {

double dot2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::acosh(std::max(1.0, -dot2(a, b)));
}

double dot4(const std::array<double, 5>& a, const std::array<double, 5>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3] - a[4] * b[4];
}

double dist4(const std::array<double, 5>& a, const std::array<double, 5>& b) {
    return std::acosh(std::max(1.0, -dot4(a, b)));
}

std::array<double, 3> normalize_space2(std::array<double, 3> v) {
    double n = std::sqrt(std::max(1e-300, dot2(v, v)));
    for (double& c : v) c /= n;
    return v;
}

std::array<double, 3> normalize_point2(std::array<double, 3> p) {
    double n = std::sqrt(std::max(1e-300, -dot2(p, p)));
    for (double& c : p) c /= n;
    if (p[2] < 0.0)
        for (double& c : p) c = -c;
    return p;
}

// <cross2(a,b), x>_L = det[a; b; x]
std::array<double, 3> cross2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], -(a[0] * b[1] - a[1] * b[0])};
}

// unit tangent at a pointing toward b
std::array<double, 3> tangent2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    std::array<double, 3> v;
    double ab = dot2(a, b);
    for (int i = 0; i < 3; ++i) v[i] = b[i] + ab * a[i];
    return normalize_space2(v);
}

std::array<double, 3> geo_exp2(const std::array<double, 3>& p, const std::array<double, 3>& v,
                               double t) {
    std::array<double, 3> x;
    for (int i = 0; i < 3; ++i) x[i] = std::cosh(t) * p[i] + std::sinh(t) * v[i];
    return normalize_point2(x);
}

double dist_to_segment2(const std::array<double, 3>& q, const std::array<double, 3>& a,
                        const std::array<double, 3>& b) {
    auto nrm = normalize_space2(cross2(a, b));
    double comp = dot2(q, nrm);
    // foot of the perpendicular on the full geodesic
    std::array<double, 3> foot;
    for (int i = 0; i < 3; ++i) foot[i] = q[i] - comp * nrm[i];
    double fn = -dot2(foot, foot);
    if (fn > 1e-12) {
        foot = normalize_point2(foot);
        double dab = dist2(a, b);
        if (dist2(a, foot) + dist2(foot, b) <= dab + 1e-9)
            return std::asinh(std::abs(comp));
    }
    return std::min(dist2(q, a), dist2(q, b));
}

bool inside_convex2(const std::array<double, 3>& q,
                    const std::vector<std::array<double, 3>>& verts) {
    std::size_t k = verts.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto nrm = cross2(verts[i], verts[(i + 1) % k]);
        // all vertices must be on one side; q must match
        double ref = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            double s = dot2(nrm, verts[j]);
            if (std::abs(s) > std::abs(ref)) ref = s;
        }
        if (ref * dot2(nrm, q) < 0.0) return false;
    }
    return true;
}

PolygonAreas polygon_region_areas(double s, const std::vector<std::array<double, 3>>& verts) {
    std::size_t k = verts.size();
    PolygonAreas areas;
    double angle_sum = 0.0;
    double perim = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& v = verts[i];
        auto t_next = tangent2(v, verts[(i + 1) % k]);
        auto t_prev = tangent2(v, verts[(i + k - 1) % k]);
        double alpha = std::acos(std::clamp(dot2(t_next, t_prev), -1.0, 1.0));
        angle_sum += alpha;
        perim += dist2(v, verts[(i + 1) % k]);
        areas.vertex += M_PI * (M_PI - alpha) * std::pow(std::sinh(s), 3);
    }
    areas.polygon_area = double(k - 2) * M_PI - angle_sum; // Gauss-Bonnet
    areas.face = 2.0 * M_PI * std::sinh(s) * sqr(std::cosh(s)) * areas.polygon_area;
    areas.edge = 2.0 * M_PI * perim * std::cosh(s) * sqr(std::sinh(s));
    return areas;
}

} // namespace hyp

std::vector<std::array<double, 3>> regular_h2_polygon(int sides, double side_len) {
    if (sides < 3) throw invalid_input("regular_h2_polygon: need >= 3 sides");
    // circumradius R from the right-triangle relation
    // sinh(side/2) = sinh(R) sin(pi/k)
    double sh = std::sinh(side_len / 2.0) / std::sin(M_PI / sides);
    double R = std::asinh(sh);
    std::vector<std::array<double, 3>> verts(sides);
    for (int i = 0; i < sides; ++i) {
        double th = 2.0 * M_PI * i / sides;
        verts[i] = {std::sinh(R) * std::cos(th), std::sinh(R) * std::sin(th), std::cosh(R)};
    }
    return verts;
}

// ---------------------------------------------------------------------------
// boundary of N_s(P) in H^4

namespace {

using V3 = std::array<double, 3>;
using V5 = std::array<double, 5>;

V5 lift(const V3& p) { return {p[0], p[1], 0.0, 0.0, p[2]}; }
V5 lift_dir(const V3& m) { return {m[0], m[1], 0.0, 0.0, m[2]}; }

V5 normalize_space4(V5 v) {
    double n = std::sqrt(std::max(1e-300, hyp::dot4(v, v)));
    for (double& c : v) c /= n;
    return v;
}

V5 geo_exp4(const V5& p, const V5& v, double t) {
    V5 x;
    for (int i = 0; i < 5; ++i) x[i] = std::cosh(t) * p[i] + std::sinh(t) * v[i];
    return x;
}

V5 tangent4(const V5& a, const V5& b) {
    V5 v;
    double ab = hyp::dot4(a, b);
    for (int i = 0; i < 5; ++i) v[i] = b[i] + ab * a[i];
    return normalize_space4(v);
}

} // namespace

GeneratedSample gen_polygon_h4(double s, const std::vector<V3>& vertices, std::size_t n,
                               std::uint64_t seed, int knn, double edge_collar,
                               double vertex_collar) {
    std::size_t k = vertices.size();
    if (k < 3) throw invalid_input("gen_polygon_h4: need at least 3 vertices");
    if (n < 10000) throw invalid_input("gen_polygon_h4: need n >= 10000");
    std::vector<V3> verts(k);
    for (std::size_t i = 0; i < k; ++i) {
        verts[i] = vertices[i];
        if (std::abs(hyp::dot2(verts[i], verts[i]) + 1.0) > 1e-6)
            throw invalid_input("gen_polygon_h4: vertex not on the hyperboloid");
    }
    double min_edge = kInf;
    for (std::size_t i = 0; i < k; ++i)
        min_edge = std::min(min_edge, hyp::dist2(verts[i], verts[(i + 1) % k]));
    if (!(s > 0.0) || s >= 0.1 * min_edge)
        throw invalid_input("gen_polygon_h4: s out of range (need 0 < s < 0.1 * min edge)");

    // convexity + nondegeneracy: every vertex strictly on one side of every edge line
    for (std::size_t i = 0; i < k; ++i) {
        auto nrm = hyp::cross2(verts[i], verts[(i + 1) % k]);
        double lo = kInf, hi = -kInf;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i || j == (i + 1) % k) continue;
            double d = hyp::dot2(nrm, verts[j]);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        if (lo * hi < 0.0 || (std::abs(lo) < 1e-12 && std::abs(hi) < 1e-12))
            throw invalid_input("gen_polygon_h4: nonconvex/degenerate polygon");
    }

    auto areas = hyp::polygon_region_areas(s, verts);

    // centroid (normalized Minkowski mean) and a sampling disk that covers P
    V3 centroid{0, 0, 0};
    for (auto& v : verts)
        for (int i = 0; i < 3; ++i) centroid[i] += v[i];
    centroid = hyp::normalize_point2(centroid);
    double Rmax = 0.0;
    for (auto& v : verts) Rmax = std::max(Rmax, hyp::dist2(centroid, v));

    // orthonormal tangent frame at the centroid
    V3 seed_dir{1.0, 0.0, 0.0};
    V3 e1;
    {
        double c = hyp::dot2(seed_dir, centroid);
        for (int i = 0; i < 3; ++i) e1[i] = seed_dir[i] + c * centroid[i];
        e1 = hyp::normalize_space2(e1);
    }
    V3 e2 = hyp::normalize_space2(hyp::cross2(centroid, e1));

    std::mt19937_64 rng(seed);

    auto sample_in_polygon = [&]() -> V3 {
        for (int tries = 0; tries < 100000; ++tries) {
            double r = std::acosh(1.0 + u01(rng) * (std::cosh(Rmax) - 1.0));
            double th = 2.0 * M_PI * u01(rng);
            V3 v{std::cos(th) * e1[0] + std::sin(th) * e2[0],
                 std::cos(th) * e1[1] + std::sin(th) * e2[1],
                 std::cos(th) * e1[2] + std::sin(th) * e2[2]};
            V3 q = hyp::geo_exp2(centroid, v, r);
            if (hyp::inside_convex2(q, verts)) return q;
        }
        throw numeric_failure("gen_polygon_h4: polygon rejection sampling failed");
    };

    double total = areas.total();
    std::vector<double> edge_len(k);
    for (std::size_t i = 0; i < k; ++i) edge_len[i] = hyp::dist2(verts[i], verts[(i + 1) % k]);

    std::vector<std::vector<double>> pts;
    pts.reserve(n);
    std::vector<Label> labels;
    labels.reserve(n);

    const V5 e3{0, 0, 1, 0, 0}, e4{0, 0, 0, 1, 0};

    auto near_vertex = [&](const V3& q) {
        for (auto& v : verts)
            if (hyp::dist2(q, v) <= vertex_collar * s) return true;
        return false;
    };
    auto dist_boundary = [&](const V3& q) {
        double d = kInf;
        for (std::size_t i = 0; i < k; ++i)
            d = std::min(d, hyp::dist_to_segment2(q, verts[i], verts[(i + 1) % k]));
        return d;
    };

    for (std::size_t i = 0; i < n; ++i) {
        double pick = u01(rng) * total;
        V5 x;
        Label lab;
        if (pick < areas.face) {
            V3 q = sample_in_polygon();
            double th = 2.0 * M_PI * u01(rng);
            V5 v;
            for (int c = 0; c < 5; ++c) v[c] = std::cos(th) * e3[c] + std::sin(th) * e4[c];
            x = geo_exp4(lift(q), v, s);
            if (near_vertex(q))
                lab = Label::Stratum0;
            else if (dist_boundary(q) <= edge_collar * s)
                lab = Label::Edge1;
            else
                lab = Label::Stratum2;
        } else if (pick < areas.face + areas.edge) {
            // pick an edge proportional to length, then a point along it
            double u = (pick - areas.face) / areas.edge;
            double acc = 0.0, perim = 0.0;
            for (double l : edge_len) perim += l;
            std::size_t ei = k - 1;
            for (std::size_t e = 0; e < k; ++e) {
                acc += edge_len[e] / perim;
                if (u <= acc) { ei = e; break; }
            }
            const V3 &a = verts[ei], &b = verts[(ei + 1) % k];
            double t = u01(rng) * edge_len[ei];
            V3 q = hyp::geo_exp2(a, hyp::tangent2(a, b), t);
            // outward conormal in the H^2 plane
            V3 tdir = hyp::tangent2(q, b);
            V3 m = hyp::normalize_space2(hyp::cross2(q, tdir));
            if (hyp::dot2(m, centroid) > 0.0)
                for (double& c : m) c = -c;
            V5 mu = normalize_space4(lift_dir(m));
            // uniform on the outward hemisphere spanned by (mu, e3, e4)
            double c0, c1, c2, n2;
            do {
                c0 = gauss(rng); c1 = gauss(rng); c2 = gauss(rng);
                n2 = c0 * c0 + c1 * c1 + c2 * c2;
            } while (n2 < 1e-12);
            double inv = 1.0 / std::sqrt(n2);
            c0 = std::abs(c0 * inv); c1 *= inv; c2 *= inv;
            V5 v;
            for (int c = 0; c < 5; ++c) v[c] = c0 * mu[c] + c1 * e3[c] + c2 * e4[c];
            x = geo_exp4(lift(q), v, s);
            lab = near_vertex(q) ? Label::Stratum0 : Label::Edge1;
        } else {
            // vertex sector: directions in S^3 making obtuse angles with both edges
            double u = (pick - areas.face - areas.edge);
            std::size_t vi = k - 1;
            double acc = 0.0;
            for (std::size_t vv = 0; vv < k; ++vv) {
                auto tn = hyp::tangent2(verts[vv], verts[(vv + 1) % k]);
                auto tp = hyp::tangent2(verts[vv], verts[(vv + k - 1) % k]);
                double alpha = std::acos(std::clamp(hyp::dot2(tn, tp), -1.0, 1.0));
                acc += M_PI * (M_PI - alpha) * std::pow(std::sinh(s), 3);
                if (u <= acc) { vi = vv; break; }
            }
            const V3& vtx = verts[vi];
            V5 t1 = tangent4(lift(vtx), lift(verts[(vi + 1) % k]));
            V5 t2 = tangent4(lift(vtx), lift(verts[(vi + k - 1) % k]));
            // in-plane unit vector orthogonal to t1
            V5 w;
            double t12 = hyp::dot4(t1, t2);
            for (int c = 0; c < 5; ++c) w[c] = t2[c] - t12 * t1[c];
            w = normalize_space4(w);
            V5 v;
            for (int tries = 0;; ++tries) {
                if (tries > 100000) throw numeric_failure("gen_polygon_h4: sector sampling failed");
                double c0 = gauss(rng), c1 = gauss(rng), c2 = gauss(rng), c3 = gauss(rng);
                double n2 = c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3;
                if (n2 < 1e-12) continue;
                double inv = 1.0 / std::sqrt(n2);
                c0 *= inv; c1 *= inv; c2 *= inv; c3 *= inv;
                for (int c = 0; c < 5; ++c)
                    v[c] = c0 * t1[c] + c1 * w[c] + c2 * e3[c] + c3 * e4[c];
                if (hyp::dot4(v, t1) <= 0.0 && hyp::dot4(v, t2) <= 0.0) break;
            }
            x = geo_exp4(lift(vtx), v, s);
            lab = Label::Stratum0;
        }
        pts.push_back({x[0], x[1], x[2], x[3], x[4]});
        labels.push_back(lab);
    }

    // k-NN by exact ambient H^4 distance
    std::size_t kk = std::min<std::size_t>(knn, n - 1);
    std::vector<std::vector<std::pair<int, double>>> nbr(n);
    parallel_for(n, [&](std::size_t i) {
        V5 xi{pts[i][0], pts[i][1], pts[i][2], pts[i][3], pts[i][4]};
        std::vector<std::pair<double, int>> cand(n);
        for (std::size_t j = 0; j < n; ++j) {
            V5 xj{pts[j][0], pts[j][1], pts[j][2], pts[j][3], pts[j][4]};
            cand[j] = {hyp::dist4(xi, xj), (int)j};
        }
        cand[i].first = kInf;
        std::partial_sort(cand.begin(), cand.begin() + kk, cand.end());
        for (std::size_t t = 0; t < kk; ++t) nbr[i].push_back({cand[t].second, cand[t].first});
    });
    std::vector<std::tuple<int, int, double>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [j, d] : nbr[i]) edges.emplace_back((int)i, j, d);

    std::vector<double> weights(n, total / double(n));
    GeneratedSample out{SampledSpace::from_edges(n, edges, std::move(weights), std::move(pts)), {}};
    out.truth.labels = std::move(labels);
    out.truth.kappa_min.assign(n, -1.0);
    out.truth.regions = {{"face", areas.face},
                         {"edge", areas.edge},
                         {"vertex", areas.vertex},
                         {"polygon_area", areas.polygon_area}};
    out.truth.expected_certificate = "graph_manifold:S3";
    out.truth.params = {{"s", s}, {"n", double(n)}, {"seed", double(seed)},
                        {"edge_collar", edge_collar}, {"vertex_collar", vertex_collar}};
    return out;
}

} // namespace c3
