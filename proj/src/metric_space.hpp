#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "common.hpp"

namespace c3 {

struct ModelCurvature {
    double c = 0.0; // lower curvature bound, 1/length^2; c <= 0 only

    explicit ModelCurvature(double c_ = 0.0) : c(c_) {
        if (c > 0.0) throw invalid_input("ModelCurvature: positive bound c > 0 is unsupported");
    }
};

/// Finite geodesic-graph metric space with per-point measure weights.
/// Immutable after construction; all queries are const and thread-safe.
class SampledSpace {
public:
    struct Edge {
        std::uint32_t to;
        double len;
    };

    static SampledSpace from_edges(std::size_t n, const std::vector<std::tuple<int, int, double>>& edges,
                                   std::vector<double> weights,
                                   std::vector<std::vector<double>> ambient = {});

    /// Symmetrized k-NN graph on a point cloud, edge length = metric(a, b).
    /// The default metric is Euclidean on the coordinate rows.
    static SampledSpace from_point_cloud(const std::vector<std::vector<double>>& coords,
                                         int k, std::vector<double> weights = {},
                                         const std::function<double(const std::vector<double>&,
                                                                    const std::vector<double>&)>& metric = nullptr);

    static SampledSpace from_distance_matrix(const std::vector<std::vector<double>>& d,
                                             std::vector<double> weights = {});

    // --- whitespace-delimited text formats ---
    // pointcloud N / metricgraph / distmatrix n
    static SampledSpace load(const std::string& path, int knn = 8);
    /// pointcloud file (weights + ambient coords) combined with an explicit
    /// metricgraph edge file; the generators emit this pair.
    static SampledSpace load_pair(const std::string& pointcloud_path,
                                  const std::string& metricgraph_path);
    void save_graph(const std::string& path) const;
    void save_point_cloud(const std::string& path) const;

    std::size_t size() const { return n_; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }
    double sampling_scale() const { return sampling_scale_; }
    double diameter() const; // max finite distance, computed lazily over components
    bool connected() const { return component_count_ == 1; }
    int component_count() const { return component_count_; }
    int component_of(std::size_t i) const { return component_[i]; }
    double component_weight(std::size_t i) const { return component_weight_[component_[i]]; }

    bool has_ambient() const { return !ambient_.empty(); }
    const std::vector<double>& ambient(std::size_t i) const { return ambient_[i]; }
    std::size_t ambient_dim() const { return ambient_.empty() ? 0 : ambient_[0].size(); }

    const std::vector<Edge>& neighbors(std::size_t i) const { return adj_[i]; }

    /// Graph distance; +inf across components.
    double distance(std::size_t a, std::size_t b) const;

    /// Full single-source distances (cached; concurrent reads, serialized fills).
    std::shared_ptr<const std::vector<double>> distances_from(std::size_t source) const;

    /// Distances truncated at `radius`: entries beyond radius are +inf.
    /// Cheaper than a full solve and never cached.
    std::vector<double> distances_within(std::size_t source, double radius) const;

    /// Points with d(p, q) <= r together with the sum of their weights.
    std::pair<std::vector<std::uint32_t>, double> ball(std::size_t p, double r) const;

    /// Comparison angle at p of the model-space triangle with side lengths
    /// d(p,a), d(p,b), d(a,b). Returns a value in [0, pi].
    double comparison_angle(std::size_t p, std::size_t a, std::size_t b,
                            const ModelCurvature& model) const;

    /// Same, from explicit side lengths (dpa, dpb adjacent, dab opposite).
    static double comparison_angle_sides(double dpa, double dpb, double dab,
                                         const ModelCurvature& model, double tolerance = 0.0);

private:
    SampledSpace() = default;
    void finalize();

    std::size_t n_ = 0;
    std::vector<std::vector<Edge>> adj_;
    std::vector<double> weights_;
    std::vector<std::vector<double>> ambient_;
    double total_weight_ = 0.0;
    double sampling_scale_ = 0.0;
    std::vector<int> component_;
    std::vector<double> component_weight_;
    int component_count_ = 0;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<std::size_t, std::shared_ptr<const std::vector<double>>> sssp_cache_;
    mutable std::vector<std::size_t> cache_order_;
    mutable double diameter_ = -1.0;
    mutable std::once_flag diam_once_;
    std::size_t cache_cap_ = 512;
};

} // namespace c3
