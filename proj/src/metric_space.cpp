#include "metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>
#include <tuple>

namespace c3 {

namespace {

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += sqr(a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

SampledSpace SampledSpace::from_edges(std::size_t n,
                                      const std::vector<std::tuple<int, int, double>>& edges,
                                      std::vector<double> weights,
                                      std::vector<std::vector<double>> ambient) {
    if (n == 0) throw invalid_input("empty input: no points");
    SampledSpace s;
    s.n_ = n;
    s.adj_.assign(n, {});
    if (weights.empty()) weights.assign(n, 1.0);
    if (weights.size() != n) throw invalid_input("weights size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw invalid_input("all weights must be > 0");
    s.weights_ = std::move(weights);
    s.ambient_ = std::move(ambient);
    for (auto& [i, j, len] : edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
            throw invalid_input("edge endpoint out of range");
        if (i == j) continue;
        if (!(len > 0.0)) throw invalid_input("nonpositive edge length");
        s.adj_[i].push_back({static_cast<std::uint32_t>(j), len});
        s.adj_[j].push_back({static_cast<std::uint32_t>(i), len});
    }
    // dedupe parallel edges, keep the shortest
    for (auto& nb : s.adj_) {
        std::sort(nb.begin(), nb.end(), [](const Edge& a, const Edge& b) {
            return a.to != b.to ? a.to < b.to : a.len < b.len;
        });
        nb.erase(std::unique(nb.begin(), nb.end(),
                             [](const Edge& a, const Edge& b) { return a.to == b.to; }),
                 nb.end());
    }
    s.finalize();
    return s;
}

SampledSpace SampledSpace::from_point_cloud(
    const std::vector<std::vector<double>>& coords, int k, std::vector<double> weights,
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>& metric) {
    if (coords.empty()) throw invalid_input("empty input: no points");
    if (k < 1) throw invalid_input("k must be >= 1 for point clouds");
    std::size_t n = coords.size();
    auto dist = metric ? metric : std::function(euclid);
    std::size_t kk = std::min<std::size_t>(k, n - 1);
    std::vector<std::vector<std::pair<int, double>>> knn(n);
    parallel_for(n, [&](std::size_t i) {
        std::vector<std::pair<double, int>> cand(n);
        for (std::size_t j = 0; j < n; ++j)
            cand[j] = {dist(coords[i], coords[j]), static_cast<int>(j)};
        cand[i].first = kInf;
        std::partial_sort(cand.begin(), cand.begin() + kk, cand.end());
        knn[i].reserve(kk);
        for (std::size_t t = 0; t < kk; ++t) knn[i].push_back({cand[t].second, cand[t].first});
    });
    std::vector<std::tuple<int, int, double>> edges;
    edges.reserve(n * kk);
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [j, len] : knn[i]) edges.emplace_back(static_cast<int>(i), j, len);
    std::vector<std::vector<double>> amb = coords;
    return from_edges(n, edges, std::move(weights), std::move(amb));
}

SampledSpace SampledSpace::from_distance_matrix(const std::vector<std::vector<double>>& d,
                                                std::vector<double> weights) {
    std::size_t n = d.size();
    if (n == 0) throw invalid_input("empty input: no points");
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw invalid_input("distance matrix not square");
        if (d[i][i] != 0.0) throw invalid_input("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j)
            if (d[i][j] != d[j][i]) throw invalid_input("asymmetric input");
    }
    std::vector<std::tuple<int, int, double>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::isfinite(d[i][j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j), d[i][j]);
    return from_edges(n, edges, std::move(weights));
}

void SampledSpace::finalize() {
    total_weight_ = 0.0;
    for (double w : weights_) total_weight_ += w;
    sampling_scale_ = 0.0;
    for (auto& nb : adj_)
        for (auto& e : nb) sampling_scale_ = std::max(sampling_scale_, e.len);
    // connected components (BFS)
    component_.assign(n_, -1);
    component_count_ = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < n_; ++s) {
        if (component_[s] >= 0) continue;
        int c = component_count_++;
        stack.push_back(static_cast<std::uint32_t>(s));
        component_[s] = c;
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            for (auto& e : adj_[u])
                if (component_[e.to] < 0) {
                    component_[e.to] = c;
                    stack.push_back(e.to);
                }
        }
    }
    component_weight_.assign(component_count_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) component_weight_[component_[i]] += weights_[i];
}

std::shared_ptr<const std::vector<double>> SampledSpace::distances_from(std::size_t source) const {
    {
        std::shared_lock lk(cache_mutex_);
        auto it = sssp_cache_.find(source);
        if (it != sssp_cache_.end()) return it->second;
    }
    auto dist = std::make_shared<std::vector<double>>(n_, kInf);
    auto& d = *dist;
    d[source] = 0.0;
    using QItem = std::pair<double, std::uint32_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;
    pq.push({0.0, static_cast<std::uint32_t>(source)});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (auto& e : adj_[u]) {
            double nd = du + e.len;
            if (nd < d[e.to]) {
                d[e.to] = nd;
                pq.push({nd, e.to});
            }
        }
    }
    std::unique_lock lk(cache_mutex_);
    auto [it, inserted] = sssp_cache_.emplace(source, dist);
    if (inserted) {
        cache_order_.push_back(source);
        if (cache_order_.size() > cache_cap_) {
            sssp_cache_.erase(cache_order_.front());
            cache_order_.erase(cache_order_.begin());
        }
    }
    return it->second;
}

std::vector<double> SampledSpace::distances_within(std::size_t source, double radius) const {
    {
        std::shared_lock lk(cache_mutex_);
        auto it = sssp_cache_.find(source);
        if (it != sssp_cache_.end()) return *it->second;
    }
    std::vector<double> d(n_, kInf);
    d[source] = 0.0;
    using QItem = std::pair<double, std::uint32_t>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;
    pq.push({0.0, static_cast<std::uint32_t>(source)});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u] || du > radius) continue;
        for (auto& e : adj_[u]) {
            double nd = du + e.len;
            if (nd < d[e.to] && nd <= radius) {
                d[e.to] = nd;
                pq.push({nd, e.to});
            }
        }
    }
    return d;
}

double SampledSpace::distance(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) throw invalid_input("point not in space");
    if (a == b) return 0.0;
    if (component_[a] != component_[b]) return kInf;
    return (*distances_from(a))[b];
}

double SampledSpace::diameter() const {
    std::call_once(diam_once_, [this] {
        // two-sweep per component gives the exact graph diameter only on trees;
        // refine with a few extra sweeps from the current farthest points
        double best = 0.0;
        std::vector<char> seen(component_count_, 0);
        for (std::size_t s = 0; s < n_; ++s) {
            if (seen[component_[s]]) continue;
            seen[component_[s]] = 1;
            std::size_t cur = s;
            for (int sweep = 0; sweep < 4; ++sweep) {
                auto d = distances_from(cur);
                std::size_t far = cur;
                double dm = 0.0;
                for (std::size_t i = 0; i < n_; ++i)
                    if (std::isfinite((*d)[i]) && (*d)[i] > dm) {
                        dm = (*d)[i];
                        far = i;
                    }
                best = std::max(best, dm);
                if (far == cur) break;
                cur = far;
            }
        }
        diameter_ = best;
    });
    return diameter_;
}

std::pair<std::vector<std::uint32_t>, double> SampledSpace::ball(std::size_t p, double r) const {
    if (p >= n_) throw invalid_input("point not in space");
    if (r < 0.0) throw invalid_input("ball radius must be >= 0");
    std::vector<double> d = distances_within(p, r);
    std::vector<std::uint32_t> pts;
    double vol = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        if (d[i] <= r) {
            pts.push_back(static_cast<std::uint32_t>(i));
            vol += weights_[i];
        }
    return {std::move(pts), vol};
}

double SampledSpace::comparison_angle_sides(double dpa, double dpb, double dab,
                                            const ModelCurvature& model, double tolerance) {
    if (!(dpa > 0.0) || !(dpb > 0.0))
        throw invalid_input("comparison angle: degenerate zero side");
    if (!std::isfinite(dpa) || !std::isfinite(dpb) || !std::isfinite(dab))
        throw invalid_input("comparison angle: points at infinite distance");
    if (dab > dpa + dpb + tolerance || dab < std::abs(dpa - dpb) - tolerance)
        throw invalid_input("comparison angle: triangle inequality violated");
    dab = std::clamp(dab, std::abs(dpa - dpb), dpa + dpb);
    double cosv;
    if (model.c == 0.0) {
        cosv = (sqr(dpa) + sqr(dpb) - sqr(dab)) / (2.0 * dpa * dpb);
    } else {
        double k = std::sqrt(-model.c);
        // hyperbolic law of cosines in curvature c = -k^2
        cosv = (std::cosh(k * dpa) * std::cosh(k * dpb) - std::cosh(k * dab)) /
               (std::sinh(k * dpa) * std::sinh(k * dpb));
    }
    return std::acos(std::clamp(cosv, -1.0, 1.0));
}

double SampledSpace::comparison_angle(std::size_t p, std::size_t a, std::size_t b,
                                      const ModelCurvature& model) const {
    if (a == p || b == p) throw invalid_input("comparison angle: vertex coincides with p");
    double dpa = distance(p, a);
    double dpb = distance(p, b);
    double dab = distance(a, b);
    return comparison_angle_sides(dpa, dpb, dab, model, 3.0 * sampling_scale_);
}

// ---------------------------------------------------------------------------
// text formats

SampledSpace SampledSpace::load(const std::string& path, int knn) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);
    std::string header;
    if (!(in >> header)) throw invalid_input("empty input file: " + path);
    if (header == "pointcloud") {
        std::size_t dim;
        if (!(in >> dim)) throw invalid_input("pointcloud: missing dimension");
        std::vector<std::vector<double>> coords;
        std::vector<double> weights;
        long long id;
        while (in >> id) {
            double w;
            in >> w;
            std::vector<double> x(dim);
            for (auto& v : x)
                if (!(in >> v)) throw invalid_input("pointcloud: truncated row");
            weights.push_back(w);
            coords.push_back(std::move(x));
        }
        return from_point_cloud(coords, knn, std::move(weights));
    }
    if (header == "metricgraph") {
        std::vector<std::tuple<int, int, double>> edges;
        int a, b;
        double len;
        int maxid = -1;
        while (in >> a >> b >> len) {
            edges.emplace_back(a, b, len);
            maxid = std::max({maxid, a, b});
        }
        if (maxid < 0) throw invalid_input("metricgraph: no edges");
        return from_edges(static_cast<std::size_t>(maxid) + 1, edges, {});
    }
    if (header == "distmatrix") {
        std::size_t n;
        if (!(in >> n)) throw invalid_input("distmatrix: missing size");
        std::vector<std::vector<double>> d(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(in >> d[i][j])) throw invalid_input("distmatrix: truncated row");
        return from_distance_matrix(d);
    }
    throw invalid_input("unknown file header: " + header);
}

void SampledSpace::save_graph(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot open output file: " + path);
    out.precision(17);
    out << "metricgraph\n";
    for (std::size_t i = 0; i < n_; ++i)
        for (auto& e : adj_[i])
            if (e.to > i) out << i << ' ' << e.to << ' ' << e.len << '\n';
}

void SampledSpace::save_point_cloud(const std::string& path) const {
    if (!has_ambient()) throw invalid_input("space carries no ambient coordinates");
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot open output file: " + path);
    out.precision(17);
    out << "pointcloud " << ambient_dim() << '\n';
    for (std::size_t i = 0; i < n_; ++i) {
        out << i << ' ' << weights_[i];
        for (double v : ambient_[i]) out << ' ' << v;
        out << '\n';
    }
}

SampledSpace SampledSpace::load_pair(const std::string& pointcloud_path,
                                     const std::string& metricgraph_path) {
    std::ifstream pc(pointcloud_path);
    if (!pc) throw invalid_input("cannot open input file: " + pointcloud_path);
    std::string header;
    std::size_t dim;
    if (!(pc >> header >> dim) || header != "pointcloud")
        throw invalid_input("not a pointcloud file: " + pointcloud_path);
    std::vector<std::vector<double>> coords;
    std::vector<double> weights;
    long long id;
    while (pc >> id) {
        double w;
        pc >> w;
        std::vector<double> x(dim);
        for (auto& v : x)
            if (!(pc >> v)) throw invalid_input("pointcloud: truncated row");
        weights.push_back(w);
        coords.push_back(std::move(x));
    }
    std::ifstream mg(metricgraph_path);
    if (!mg) throw invalid_input("cannot open input file: " + metricgraph_path);
    if (!(mg >> header) || header != "metricgraph")
        throw invalid_input("not a metricgraph file: " + metricgraph_path);
    std::vector<std::tuple<int, int, double>> edges;
    int a, b;
    double len;
    while (mg >> a >> b >> len) edges.emplace_back(a, b, len);
    return from_edges(coords.size(), edges, std::move(weights), std::move(coords));
}

} // namespace c3
