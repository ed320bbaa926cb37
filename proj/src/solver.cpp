#include "ttc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <thread>

namespace ttc {

namespace {

// Backtracking state for one connected component.  Colors are offsets into
// the signed window [-(r-1), r-1] around the anchored first vertex; a mask
// bit k stands for color k - (r-1).
class ComponentSearch {
public:
    ComponentSearch(const Graph& g, const NearFarLabeling& lab, const ParamPair& pair,
                    const std::vector<int>& order)
        : g_(g), lab_(lab), r_(pair.r), t_(pair.t), order_(order) {
        pos_.assign(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < order_.size(); ++i) pos_[static_cast<size_t>(order_[i])] = static_cast<int>(i);
        const int width = 2 * r_ - 1;
        full_ = width >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << width) - 1);
        domain_.assign(order_.size(), full_);
        color_.assign(order_.size(), 0);
    }

    // Colors in component order, or empty when unsatisfiable.
    std::optional<std::vector<int>> run() {
        if (order_.empty()) return std::vector<int>{};
        if (!assign(0, r_ - 1)) return std::nullopt; // anchor first vertex at 0
        if (extend(1)) {
            std::vector<int> out(order_.size());
            for (size_t i = 0; i < order_.size(); ++i) out[i] = color_[i] - (r_ - 1);
            return out;
        }
        return std::nullopt;
    }

private:
    bool extend(size_t depth) {
        if (depth == order_.size()) return true;
        const std::uint64_t dom = domain_[depth] & window_mask();
        for (int c = 0; c < 2 * r_ - 1; ++c) {
            if (!((dom >> c) & 1)) continue;
            const int save_min = min_, save_max = max_;
            const size_t trail_mark = trail_.size();
            if (assign(depth, c) && extend(depth + 1)) return true;
            undo(trail_mark);
            min_ = save_min;
            max_ = save_max;
        }
        return false;
    }

    std::uint64_t window_mask() const {
        // colors that keep max - min <= r-1
        const int lo = std::max(0, max_ - (r_ - 1));
        const int hi = std::min(2 * r_ - 2, min_ + (r_ - 1));
        if (lo > hi) return 0;
        std::uint64_t m = hi - lo + 1 >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (hi - lo + 1)) - 1);
        return m << lo;
    }

    bool assign(size_t depth, int c) {
        color_[depth] = c;
        if (depth == 0) {
            min_ = max_ = c;
        } else {
            min_ = std::min(min_, c);
            max_ = std::max(max_, c);
        }
        const int v = order_[depth];
        for (auto [w, e] : g_.neighbors(v)) {
            const int wp = pos_[static_cast<size_t>(w)];
            if (wp < 0 || static_cast<size_t>(wp) <= depth) continue;
            const std::uint64_t near_band = band(c - t_, c + t_);
            const std::uint64_t allowed = lab_.is_near(e) ? near_band : ~near_band;
            const std::uint64_t next = domain_[static_cast<size_t>(wp)] & allowed;
            if (next != domain_[static_cast<size_t>(wp)]) {
                trail_.emplace_back(wp, domain_[static_cast<size_t>(wp)]);
                domain_[static_cast<size_t>(wp)] = next;
                if (!(next & window_mask())) return false;
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            auto [wp, dom] = trail_.back();
            trail_.pop_back();
            domain_[static_cast<size_t>(wp)] = dom;
        }
    }

    std::uint64_t band(int lo, int hi) const {
        lo = std::max(lo, 0);
        hi = std::min(hi, 2 * r_ - 2);
        if (lo > hi) return 0;
        std::uint64_t m = hi - lo + 1 >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (hi - lo + 1)) - 1);
        return m << lo;
    }

    const Graph& g_;
    const NearFarLabeling& lab_;
    int r_, t_;
    const std::vector<int>& order_;
    std::vector<int> pos_;
    std::uint64_t full_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> color_;
    std::vector<std::pair<int, std::uint64_t>> trail_;
    int min_ = 0, max_ = 0;
};

std::vector<std::vector<int>> bfs_component_orders(const Graph& g) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> orders;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        orders.emplace_back();
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            orders.back().push_back(v);
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
    }
    return orders;
}

} // namespace

std::optional<ThresholdColoring> find_coloring(const Graph& g, const NearFarLabeling& lab,
                                               const ParamPair& pair) {
    if (lab.size() != g.edge_count())
        throw structural_error("labeling size does not match edge count");
    if (pair.r > 32) throw parameter_error("find_coloring supports r <= 32");

    ThresholdColoring out;
    out.colors.assign(static_cast<size_t>(g.vertex_count()), 0);
    out.pair = pair;
    for (const auto& order : bfs_component_orders(g)) {
        ComponentSearch search(g, lab, pair, order);
        auto colors = search.run();
        if (!colors) return std::nullopt;
        // per-component canonical shift keeps the global minimum at 0
        const int lo = colors->empty() ? 0 : *std::min_element(colors->begin(), colors->end());
        for (size_t i = 0; i < order.size(); ++i)
            out.colors[static_cast<size_t>(order[i])] = (*colors)[i] - lo;
    }
    return out;
}

SweepReport total_check(const Graph& g, const ParamPair& pair, const SweepOptions& opts) {
    SweepReport rep;
    rep.family = g.family();
    rep.family_n = g.family_n();
    rep.pair = pair;
    const int m = g.edge_count();
    if (m > opts.edge_limit)
        throw parameter_error("sweep needs edge limit >= " + std::to_string(m) +
                              " (got " + std::to_string(opts.edge_limit) + ")");
    const std::uint64_t total = std::uint64_t(1) << m;
    rep.labelings = total;

    struct ChunkResult {
        std::vector<std::uint64_t> failures;
        std::uint64_t constructor_failures = 0;
        int max_window = 0;
    };
    const int jobs = std::max(1, opts.jobs);
    const std::uint64_t nchunks = std::min<std::uint64_t>(total, std::uint64_t(jobs) * 8);
    std::vector<ChunkResult> results(static_cast<size_t>(nchunks));

    auto worker = [&](std::uint64_t chunk) {
        const std::uint64_t begin = total * chunk / nchunks;
        const std::uint64_t end = total * (chunk + 1) / nchunks;
        ChunkResult& res = results[static_cast<size_t>(chunk)];
        for (std::uint64_t bits = begin; bits < end; ++bits) {
            const NearFarLabeling lab = NearFarLabeling::from_bits(g, bits);
            bool ok = false;
            int window = 0;
            if (opts.constructor) {
                try {
                    ThresholdColoring col = opts.constructor(g, lab);
                    if (is_valid(g, lab, pair, col)) {
                        ok = true;
                        window = col.window_width();
                    } else {
                        ++res.constructor_failures;
                    }
                } catch (const std::exception&) {
                    ++res.constructor_failures;
                }
            }
            if (!ok) {
                auto col = find_coloring(g, lab, pair);
                if (col) {
                    ok = true;
                    window = col->window_width();
                }
            }
            if (!ok)
                res.failures.push_back(bits);
            else
                res.max_window = std::max(res.max_window, window);
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    if (jobs == 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) worker(c);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] {
                for (std::uint64_t c = static_cast<std::uint64_t>(j); c < nchunks; c += static_cast<std::uint64_t>(jobs))
                    worker(c);
            });
        for (auto& th : threads) th.join();
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& res : results) {
        rep.failures.insert(rep.failures.end(), res.failures.begin(), res.failures.end());
        rep.constructor_failures += res.constructor_failures;
        rep.max_window = std::max(rep.max_window, res.max_window);
    }
    return rep;
}

std::vector<ParamPair> minimal_pair_frontier(const Graph& g, const NearFarLabeling& lab,
                                             int r_max, int t_max) {
    // Solvability is monotone along pair_leq, so decide upward from small r
    // and reuse verdicts of dominated pairs.
    std::vector<ParamPair> sat;
    for (int r = 1; r <= r_max; ++r) {
        for (int t = 0; t <= std::min(t_max, r - 1); ++t) {
            const ParamPair p(r, t);
            bool known_sat = false;
            for (const auto& q : sat)
                if (pair_leq(q, p)) {
                    known_sat = true;
                    break;
                }
            if (known_sat || find_coloring(g, lab, p)) sat.push_back(p);
        }
    }
    std::vector<ParamPair> frontier;
    for (const auto& p : sat) {
        bool minimal = true;
        for (const auto& q : sat)
            if (q != p && pair_leq(q, p)) {
                minimal = false;
                break;
            }
        if (minimal) frontier.push_back(p);
    }
    return frontier;
}

std::string ImpossibilityCertificate::describe(const Graph& g) const {
    (void)g;
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        s += "step " + std::to_string(i) + ": cycle (" + std::to_string(st.w) + "," +
             std::to_string(st.x) + "," + std::to_string(st.y) + "," + std::to_string(st.z) +
             ") far {" + std::to_string(st.w) + "-" + std::to_string(st.x) + "," +
             std::to_string(st.y) + "-" + std::to_string(st.z) + "} gives c(" +
             std::to_string(st.z) + ") > c(" + std::to_string(st.y) + ")\n";
    }
    if (!steps.empty()) {
        const auto& first = steps.front();
        const auto& last = steps.back();
        s += "conclusion c(" + std::to_string(last.z) + ") > c(" + std::to_string(last.y) +
             ") contradicts premise c(" + std::to_string(first.w) + ") > c(" +
             std::to_string(first.x) + ")\n";
    }
    return s;
}

ImpossibilityCertificate moebius_certificate(int n) {
    if (n < 3) throw parameter_error("moebius ladder length must be >= 3");
    ImpossibilityCertificate cert;
    const int m = 2 * n;
    for (int k = 0; k < n; ++k) {
        CertificateStep st;
        st.w = k % m;
        st.x = (n + k) % m;
        st.y = (n + k + 1) % m;
        st.z = (k + 1) % m;
        cert.steps.push_back(st);
    }
    return cert;
}

NearFarLabeling moebius_spoke_far_labeling(const Graph& moebius) {
    MoebiusIndex ix(moebius);
    NearFarLabeling lab(moebius.edge_count());
    for (int i = 0; i < ix.n; ++i) lab.set_far(ix.spoke(i), true);
    return lab;
}

ImpossibilityCertificate k4_certificate() {
    ImpossibilityCertificate cert;
    cert.steps.push_back({0, 1, 2, 3});
    cert.steps.push_back({3, 2, 0, 1});
    return cert;
}

NearFarLabeling k4_certificate_labeling(const Graph& k4) {
    if (!k4.is_family(Family::complete) || k4.vertex_count() != 4)
        throw family_error("not a K4");
    NearFarLabeling lab(k4.edge_count());
    lab.set_far(*k4.edge_index(0, 1), true);
    lab.set_far(*k4.edge_index(2, 3), true);
    return lab;
}

bool check_certificate(const Graph& g, const NearFarLabeling& lab,
                       const ImpossibilityCertificate& cert) {
    if (lab.size() != g.edge_count())
        throw structural_error("labeling size does not match edge count");
    if (cert.steps.empty()) return false;
    for (const auto& st : cert.steps)
        for (int v : {st.w, st.x, st.y, st.z})
            if (v < 0 || v >= g.vertex_count())
                throw structural_error("certificate references vertex out of range");

    auto far_edge = [&](int u, int v) {
        auto e = g.edge_index(u, v);
        return e && lab.is_far(*e);
    };
    auto near_edge = [&](int u, int v) {
        auto e = g.edge_index(u, v);
        return e && lab.is_near(*e);
    };
    for (const auto& st : cert.steps) {
        if (!far_edge(st.w, st.x) || !far_edge(st.y, st.z)) return false;
        if (!near_edge(st.x, st.y) || !near_edge(st.z, st.w)) return false;
    }
    for (size_t i = 0; i + 1 < cert.steps.size(); ++i) {
        if (cert.steps[i].z != cert.steps[i + 1].w) return false;
        if (cert.steps[i].y != cert.steps[i + 1].x) return false;
    }
    // closing conclusion c(z) > c(y) must be the reverse of the premise
    const auto& first = cert.steps.front();
    const auto& last = cert.steps.back();
    return last.z == first.x && last.y == first.w;
}

} // namespace ttc
