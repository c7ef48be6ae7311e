#include "epkit/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "epkit/errors.hpp"
#include "epkit/search.hpp"

namespace epkit {

namespace {

// Thin deterministic draw helpers; mt19937_64 output is fixed by the
// standard, so fixed seeds reproduce bit for bit everywhere.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next() { return engine(); }

    int below(int m) {
        std::uint64_t cutoff = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(m);
        std::uint64_t r;
        do {
            r = engine();
        } while (r >= cutoff);
        return static_cast<int>(r % static_cast<std::uint64_t>(m));
    }

    double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
};

} // namespace

Multigraph gen_cycle(int n) {
    require(n >= 1, "gen_cycle: n must be positive");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph gen_path(int n) {
    require(n >= 1, "gen_path: n must be positive");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph gen_complete(int n) {
    require(n >= 1, "gen_complete: n must be positive");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, "gen_grid: rows and cols must be positive");
    Multigraph g(rows * cols);
    auto at = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
        }
    return g;
}

Multigraph gen_theta(int a, int b, int c) {
    require(a >= 1 && b >= 1 && c >= 1, "gen_theta: path lengths must be positive");
    Multigraph g(2 + (a - 1) + (b - 1) + (c - 1));
    VertexId fresh = 2;
    auto add_path = [&](int len) {
        VertexId prev = 0;
        for (int i = 1; i < len; ++i) {
            g.add_edge(prev, fresh);
            prev = fresh++;
        }
        g.add_edge(prev, 1);
    };
    add_path(a);
    add_path(b);
    add_path(c);
    return g;
}

Multigraph gen_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "gen_gnp: n must be positive");
    require(p >= 0.0 && p <= 1.0, "gen_gnp: p must lie in [0, 1]");
    Rng rng(seed);
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) g.add_edge(i, j);
    return g;
}

Multigraph disjoint_union(const std::vector<Multigraph>& parts) {
    std::size_t total = 0;
    for (const Multigraph& part : parts) {
        for (VertexId v : part.vertices())
            require(v < part.num_vertices(), "disjoint_union: parts must have contiguous ids");
        total += part.num_vertices();
    }
    Multigraph g(total);
    VertexId base = 0;
    for (const Multigraph& part : parts) {
        for (EdgeId e : part.edges()) {
            auto [u, v] = part.endpoints(e);
            g.add_edge(base + u, base + v);
        }
        base += static_cast<VertexId>(part.num_vertices());
    }
    return g;
}

Multigraph random_multigraph(int max_vertices, int max_edges, std::uint64_t seed) {
    require(max_vertices >= 1, "random_multigraph: need at least one vertex");
    require(max_edges >= 0, "random_multigraph: max_edges must be nonnegative");
    Rng rng(seed);
    int n = 1 + rng.below(max_vertices);
    int m = rng.below(max_edges + 1);
    Multigraph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(rng.below(n), rng.below(n));
    return g;
}

Multigraph random_min_degree_graph(int n, int min_degree, std::uint64_t seed) {
    require(min_degree >= 0, "random_min_degree_graph: min_degree must be nonnegative");
    require(n > min_degree, "random_min_degree_graph: need n > min_degree");
    Rng rng(seed);
    Multigraph g(n);
    for (;;) {
        VertexId worst = 0;
        for (VertexId v : g.vertices())
            if (g.degree(v) < g.degree(worst)) worst = v;
        if (static_cast<int>(g.degree(worst)) >= min_degree) break;
        std::vector<VertexId> candidates;
        std::vector<VertexId> taken = g.neighbors(worst);
        for (VertexId v : g.vertices()) {
            if (v == worst) continue;
            if (!std::binary_search(taken.begin(), taken.end(), v)) candidates.push_back(v);
        }
        g.add_edge(worst, candidates[rng.below(static_cast<int>(candidates.size()))]);
    }
    return g;
}

namespace {

// Graphs on up to 8 vertices fit one adjacency bit row per vertex, and the
// upper triangle packs into 28 bits.  The canonical code is the smallest
// packed triangle over all vertex orders, minimized by prefix-pruned
// placement.
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};
};

std::uint32_t pack_code(const SmallGraph& g, const std::array<int, 8>& order) {
    std::uint32_t code = 0;
    for (int j = 1; j < g.n; ++j) {
        std::uint32_t chunk = 0;
        for (int i = 0; i < j; ++i)
            chunk = chunk << 1 | (g.adj[order[j]] >> order[i] & 1u);
        code = code << j | chunk;
    }
    return code;
}

// Greedy lexicographic placement: the code compares chunk by chunk, so only
// vertices attaining the smallest next chunk can start a minimal completion,
// and all their ties are explored.  Two prunings keep that tree small:
// vertices with identical adjacency rows are interchangeable (one
// representative per twin class), and any prefix lexicographically above the
// best code found so far is dead.  The prefix test reads the live best, so a
// leaf update prunes every branch entered afterwards.
class Canonizer {
  public:
    explicit Canonizer(const SmallGraph& g) : g_(g) {}

    std::uint32_t run() {
        std::array<int, 8> identity{};
        for (int i = 0; i < g_.n; ++i) identity[i] = i;
        set_best(pack_code(g_, identity));
        place(0);
        return best_;
    }

  private:
    void set_best(std::uint32_t code) {
        best_ = code;
        for (int j = g_.n - 1; j >= 1; --j) {
            best_chunks_[j] = code & ((1u << j) - 1);
            code >>= j;
        }
    }

    bool twins(int u, int v) const {
        std::uint8_t off = static_cast<std::uint8_t>(~(1u << u | 1u << v));
        return (g_.adj[u] & off) == (g_.adj[v] & off);
    }

    void place(int depth) {
        // -1 below best prefix, 0 equal so far, +1 above (dead).
        int cmp = 0;
        for (int j = 1; j < depth && cmp == 0; ++j)
            cmp = cur_chunks_[j] < best_chunks_[j] ? -1
                : cur_chunks_[j] > best_chunks_[j] ? 1
                                                   : 0;
        if (cmp > 0) return;
        if (depth == g_.n) {
            std::uint32_t code = pack_code(g_, order_);
            if (code < best_) set_best(code);
            return;
        }
        std::array<std::uint8_t, 8> chunk{};
        std::uint8_t mn = 255;
        for (int v = 0; v < g_.n; ++v) {
            if (used_ >> v & 1) continue;
            std::uint8_t bits = 0;
            for (int i = 0; i < depth; ++i)
                bits = bits << 1 | (g_.adj[v] >> order_[i] & 1u);
            chunk[v] = bits;
            mn = std::min(mn, bits);
        }
        if (cmp == 0 && depth > 0 && mn > best_chunks_[depth]) return;
        std::array<int, 8> reps{};
        int rep_count = 0;
        for (int v = 0; v < g_.n; ++v) {
            if ((used_ >> v & 1) || chunk[v] != mn) continue;
            bool duplicate = false;
            for (int r = 0; r < rep_count && !duplicate; ++r)
                duplicate = twins(reps[r], v);
            if (duplicate) continue;
            reps[rep_count++] = v;
        }
        for (int r = 0; r < rep_count; ++r) {
            order_[depth] = reps[r];
            cur_chunks_[depth] = mn;
            used_ |= 1u << reps[r];
            place(depth + 1);
            used_ &= ~(1u << reps[r]);
        }
    }

    const SmallGraph& g_;
    std::uint32_t best_ = UINT32_MAX;
    std::array<std::uint8_t, 8> best_chunks_{};
    std::array<std::uint8_t, 8> cur_chunks_{};
    std::array<int, 8> order_{};
    std::uint32_t used_ = 0;
};

std::uint32_t canonical_code(const SmallGraph& g) {
    if (g.n <= 1) return 0;
    // Anchor the first position on every vertex in turn; the prefix pruning
    // runs inside Canonizer::place.
    Canonizer c(g);
    return c.run();
}

SmallGraph decode(int n, std::uint32_t code) {
    SmallGraph g;
    g.n = n;
    for (int j = n - 1; j >= 1; --j) {
        std::uint32_t chunk = code & ((1u << j) - 1);
        code >>= j;
        for (int i = j - 1; i >= 0; --i) {
            if (chunk & 1u) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
            chunk >>= 1;
        }
    }
    return g;
}

} // namespace

std::vector<Multigraph> connected_graphs_up_to(int max_n) {
    require(max_n >= 1 && max_n <= 8, "connected_graphs_up_to: max_n must lie in 1..8");
    std::vector<std::set<std::uint32_t>> levels(max_n + 1);
    levels[1].insert(0);
    for (int n = 2; n <= max_n; ++n) {
        for (std::uint32_t code : levels[n - 1]) {
            SmallGraph base = decode(n - 1, code);
            base.n = n;
            for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
                SmallGraph next = base;
                next.adj[n - 1] = static_cast<std::uint8_t>(s);
                for (int i = 0; i < n - 1; ++i)
                    if (s >> i & 1u) next.adj[i] |= 1u << (n - 1);
                levels[n].insert(canonical_code(next));
            }
        }
    }
    std::vector<Multigraph> out;
    for (int n = 1; n <= max_n; ++n) {
        for (std::uint32_t code : levels[n]) {
            SmallGraph sg = decode(n, code);
            Multigraph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (sg.adj[i] >> j & 1u) g.add_edge(i, j);
            if (is_connected(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

namespace {

// 2x2 matrices over GF(7) with determinant one, taken modulo sign; these form
// the 168-element group PSL(2,7).  Sign is fixed by making the first nonzero
// entry at most 3.
using Mat = std::array<int, 4>;

int mod7(long long v) {
    int r = static_cast<int>(v % 7);
    return r < 0 ? r + 7 : r;
}

Mat mat_canon(Mat m) {
    for (int v : m) {
        if (v == 0) continue;
        if (v > 3)
            for (int& x : m) x = mod7(-x);
        break;
    }
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    return mat_canon({mod7(a[0] * b[0] + a[1] * b[2]), mod7(a[0] * b[1] + a[1] * b[3]),
                      mod7(a[2] * b[0] + a[3] * b[2]), mod7(a[2] * b[1] + a[3] * b[3])});
}

} // namespace

Multigraph high_girth_cubic() {
    std::vector<Mat> group;
    std::map<Mat, int> index;
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c)
                for (int d = 0; d < 7; ++d) {
                    if (mod7(a * d - b * c) != 1) continue;
                    Mat m = mat_canon({a, b, c, d});
                    if (index.emplace(m, static_cast<int>(group.size())).second)
                        group.push_back(m);
                }
    ensure(group.size() == 168, "high_girth_cubic: PSL(2,7) has 168 elements");

    // Voltage lift of the triple edge: vertices are two copies of the group,
    // and left g is joined to right g*a for each of the three voltages below.
    // Cycles alternate sides, so their length is twice the number of rungs,
    // and this voltage triple admits no product of up to five rung quotients
    // equal to the identity.  Hence girth 12, which the check below confirms.
    const std::array<Mat, 3> voltages = {
        Mat{1, 0, 0, 1}, Mat{0, 1, 6, 2}, Mat{0, 1, 6, 5}};
    int half = static_cast<int>(group.size());
    Multigraph g(2 * half);
    for (int i = 0; i < half; ++i)
        for (const Mat& a : voltages) g.add_edge(i, half + index.at(mat_mul(group[i], a)));

    ensure(is_connected(g), "high_girth_cubic: lift is connected");
    for (VertexId v : g.vertices())
        ensure(g.degree(v) == 3, "high_girth_cubic: lift is cubic");
    auto shortest = girth(g);
    ensure(shortest.has_value() && shortest->first == 12, "high_girth_cubic: girth is 12");
    return g;
}

} // namespace epkit
