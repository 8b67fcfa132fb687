#include "plateau/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plateau {

namespace {

constexpr size_t kOrbitHardCap = 2'000'000;

size_t orbit_budget(const PlateauConfig& cfg) {
    BigInt l = lcm(lcm(denominator(cfg.a), denominator(cfg.b)),
                   lcm(denominator(cfg.c()), denominator(cfg.plateau_left)));
    BigInt budget = 10 * l;
    if (budget > BigInt(kOrbitHardCap)) return kOrbitHardCap;
    return budget.convert_to<size_t>() + 64;
}

// Collects the forward closure of `seeds` under `step`; step returning
// nullopt stops that orbit (used for points dying in the hole).
template <typename Step>
std::vector<Rational> orbit_closure(std::vector<Rational> seeds, size_t budget, Step step) {
    std::set<Rational> seen;
    std::vector<Rational> work;
    for (auto& s : seeds)
        if (seen.insert(s).second) work.push_back(s);
    size_t iterations = 0;
    while (!work.empty()) {
        if (++iterations > budget)
            throw std::logic_error("orbit closure exceeded its budget (internal error)");
        Rational x = std::move(work.back());
        work.pop_back();
        auto next = step(x);
        if (!next) continue;
        if (seen.insert(*next).second) work.push_back(*next);
    }
    return {seen.begin(), seen.end()};
}

int point_index(const std::vector<Rational>& points, const Rational& x) {
    auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it == points.end() || *it != x) return -1;
    return int(it - points.begin());
}

// Fills adjacency: node i covers node j iff the branch image of cell(i)
// contains cell(j). Verifies that image endpoints are breakpoints.
void fill_adjacency(MarkovSystem& sys, const DoubleCover& cover) {
    sys.adjacency.assign(sys.node_count(), {});
    for (size_t ni = 0; ni < sys.node_count(); ++ni) {
        const RatInterval& cell = sys.cells[size_t(sys.cell_of_node[ni])];
        int symbol = cell.hi <= cover.c ? 0 : 1;
        Rational u = cover.branch_value(symbol, cell.lo);
        Rational v = cover.branch_value(symbol, cell.hi);
        if (u > v) std::swap(u, v);
        int iu = point_index(sys.points, u);
        int iv = point_index(sys.points, v);
        if (iu < 0 || iv < 0)
            throw std::logic_error("cell image endpoint is not a breakpoint (internal error)");
        for (int c2 = iu; c2 < iv; ++c2) {
            int nj = sys.node_of_cell[size_t(c2)];
            if (nj >= 0) sys.adjacency[ni].push_back(nj);
        }
    }
}

void finish_partition(MarkovSystem& sys, const std::vector<Rational>& pts) {
    sys.points = pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i) sys.cells.push_back({pts[i], pts[i + 1]});
    sys.node_of_cell.assign(sys.cells.size(), -1);
}

struct SccInfo {
    std::vector<int> comp;  // node -> component id
    int count = 0;
};

// Iterative Tarjan.
SccInfo strongly_connected(const std::vector<std::vector<int>>& adj) {
    int n = int(adj.size());
    SccInfo info;
    info.comp.assign(size_t(n), -1);
    std::vector<int> index(size_t(n), -1), low(size_t(n), 0);
    std::vector<bool> on_stack(size_t(n), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[size_t(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[size_t(root)] = low[size_t(root)] = next_index++;
        stack.push_back(root);
        on_stack[size_t(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj[size_t(f.v)].size()) {
                int w = adj[size_t(f.v)][f.edge++];
                if (index[size_t(w)] == -1) {
                    index[size_t(w)] = low[size_t(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[size_t(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[size_t(w)]) {
                    low[size_t(f.v)] = std::min(low[size_t(f.v)], index[size_t(w)]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[size_t(frames.back().v)] = std::min(low[size_t(frames.back().v)], low[size_t(v)]);
                if (low[size_t(v)] == index[size_t(v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[size_t(w)] = false;
                        info.comp[size_t(w)] = info.count;
                        if (w == v) break;
                    }
                    ++info.count;
                }
            }
        }
    }
    return info;
}

// Collatz-Wielandt enclosure of rho(block) for an irreducible 0/1 block,
// iterating (block + I) on an exact integer vector.
SpectralEnclosure cw_enclosure(const std::vector<std::vector<int>>& block_adj) {
    size_t n = block_adj.size();
    std::vector<BigInt> x(n, 1), y(n);
    Rational lo = 0, hi = 0;
    const Rational tol(1, BigInt(1) << 48);
    for (int iter = 0; iter < 4000; ++iter) {
        for (size_t i = 0; i < n; ++i) {
            BigInt acc = x[i];  // the +I term
            for (int j : block_adj[i]) acc += x[size_t(j)];
            y[i] = acc;
        }
        lo = Rational(y[0], x[0]);
        hi = lo;
        for (size_t i = 1; i < n; ++i) {
            Rational r(y[i], x[i]);
            if (r < lo) lo = r;
            if (r > hi) hi = r;
        }
        x.swap(y);
        if (hi - lo <= tol * lo) break;
        if ((iter & 63) == 63) {
            BigInt g = x[0];
            for (size_t i = 1; i < n && g != 1; ++i) g = gcd(g, x[i]);
            if (g > 1)
                for (auto& v : x) v /= g;
        }
    }
    return {lo - 1, hi - 1};
}

struct SpectralSummary {
    bool positive = false;
    SpectralEnclosure rho{0, 0};
};

SpectralSummary analyze(const MarkovSystem& sys) {
    SpectralSummary out;
    if (sys.node_count() == 0) return out;
    SccInfo scc = strongly_connected(sys.adjacency);
    for (int comp = 0; comp < scc.count; ++comp) {
        std::vector<int> members;
        for (size_t v = 0; v < sys.node_count(); ++v)
            if (scc.comp[v] == comp) members.push_back(int(v));
        std::vector<int> local(sys.node_count(), -1);
        for (size_t i = 0; i < members.size(); ++i) local[size_t(members[i])] = int(i);
        std::vector<std::vector<int>> block(members.size());
        size_t internal_edges = 0;
        bool branching = false;
        for (size_t i = 0; i < members.size(); ++i) {
            size_t deg = 0;
            for (int w : sys.adjacency[size_t(members[i])]) {
                if (local[size_t(w)] >= 0) {
                    block[i].push_back(local[size_t(w)]);
                    ++deg;
                }
            }
            internal_edges += deg;
            if (deg >= 2) branching = true;
        }
        if (internal_edges == 0) continue;  // no cycle through this component
        if (!branching) {
            // a bare cycle: rho exactly 1
            if (out.rho.hi < 1) out.rho = {1, 1};
            continue;
        }
        out.positive = true;
        SpectralEnclosure e = cw_enclosure(block);
        if (e.hi > out.rho.hi) out.rho.hi = e.hi;
        if (e.lo > out.rho.lo) out.rho.lo = e.lo;
    }
    return out;
}

EntropyResult summarize_log(const SpectralSummary& s, int matrix_size) {
    EntropyResult r;
    r.positive = s.positive;
    r.matrix_size = matrix_size;
    if (s.rho.hi <= 0) {
        r.value = 0.0;
        r.bound = 0.0;
        return r;
    }
    double llo = std::log(to_double(s.rho.lo));
    double lhi = std::log(to_double(s.rho.hi));
    r.value = 0.5 * (llo + lhi);
    r.bound = 0.5 * (lhi - llo) + 1e-14;
    return r;
}

}  // namespace

MarkovSystem build_markov(const PlateauConfig& cfg) {
    const auto& f = cfg.cover;
    std::vector<Rational> seeds{f.a_m, f.b_m, cfg.a, cfg.b, f.c,
                                evaluate(cfg, f.c, Side::minus), evaluate(cfg, f.c, Side::plus)};
    size_t budget = orbit_budget(cfg);
    auto pts = orbit_closure(seeds, budget, [&](const Rational& x) -> std::optional<Rational> {
        return step_exact(cfg, x);
    });

    MarkovSystem sys;
    finish_partition(sys, pts);
    sys.kind.resize(sys.cells.size());
    for (size_t i = 0; i < sys.cells.size(); ++i) {
        const auto& cell = sys.cells[i];
        if (cell.hi <= cfg.a || cell.lo >= cfg.b) {
            sys.kind[i] = CellKind::branch;
            sys.node_of_cell[i] = int(sys.cell_of_node.size());
            sys.cell_of_node.push_back(int(i));
        } else {
            sys.kind[i] = CellKind::plateau;
            sys.remainder.push_back(cell);
        }
    }
    fill_adjacency(sys, f);
    return sys;
}

MarkovSystem build_survivor_markov(const DoubleCover& cover, const Rational& a, const Rational& b) {
    if (a < cover.a_m || a > cover.a_M || b < cover.b_M || b > cover.b_m)
        throw std::invalid_argument("hole endpoints outside the parameter box");
    std::vector<Rational> seeds{cover.a_m, cover.b_m, a, b, cover.c};
    PlateauConfig budget_cfg = make_plateau(cover, a, b);
    auto pts = orbit_closure(seeds, orbit_budget(budget_cfg),
                             [&](const Rational& x) -> std::optional<Rational> {
                                 if (a < x && x < b) return std::nullopt;  // dies in the hole
                                 return x <= a ? cover.left(x) : cover.right(x);
                             });

    MarkovSystem sys;
    finish_partition(sys, pts);
    sys.kind.resize(sys.cells.size());
    for (size_t i = 0; i < sys.cells.size(); ++i) {
        const auto& cell = sys.cells[i];
        if (cell.hi <= a || cell.lo >= b) {
            sys.kind[i] = CellKind::branch;
            sys.node_of_cell[i] = int(sys.cell_of_node.size());
            sys.cell_of_node.push_back(int(i));
        } else {
            sys.kind[i] = CellKind::hole;
            sys.remainder.push_back(cell);
        }
    }
    fill_adjacency(sys, cover);
    return sys;
}

bool spectral_positive(const MarkovSystem& sys) {
    if (sys.node_count() == 0) return false;
    SccInfo scc = strongly_connected(sys.adjacency);
    std::vector<int> internal_degree(sys.node_count(), 0);
    for (size_t v = 0; v < sys.node_count(); ++v) {
        for (int w : sys.adjacency[v])
            if (scc.comp[size_t(w)] == scc.comp[v]) ++internal_degree[v];
        if (internal_degree[v] >= 2) return true;
    }
    return false;
}

SpectralEnclosure spectral_radius(const MarkovSystem& sys) { return analyze(sys).rho; }

EntropyResult entropy(const MarkovSystem& sys) {
    return summarize_log(analyze(sys), int(sys.node_count()));
}

bool is_chaotic(const PlateauConfig& cfg) { return spectral_positive(build_markov(cfg)); }

DimensionResult survivor_dimension(const DoubleCover& cover, const Rational& a, const Rational& b) {
    MarkovSystem sys = build_survivor_markov(cover, a, b);
    SpectralSummary s = analyze(sys);
    DimensionResult r;
    r.method = DimensionResult::Method::markov_exact;
    r.n = 0;
    r.matrix_size = int(sys.node_count());
    r.positive = s.positive;
    double log_lambda = std::log(double(cover.lambda));
    if (s.rho.hi <= 0) {
        r.value = 0.0;
        r.bound = 0.0;
        return r;
    }
    double llo = std::log(to_double(s.rho.lo)) / log_lambda;
    double lhi = std::log(to_double(s.rho.hi)) / log_lambda;
    r.value = 0.5 * (llo + lhi);
    r.bound = 0.5 * (lhi - llo) + 1e-14;
    return r;
}

std::uint64_t cylinder_count(const DoubleCover& cover, const Rational& a, const Rational& b, int n) {
    if (n < 1 || n > 48) throw std::invalid_argument("cylinder_count needs 1 <= n <= 48");
    // depth-first over words; state = exact image interval of the cylinder
    std::uint64_t count = 0;
    struct Node {
        RatInterval iv;
        int depth;
    };
    std::vector<Node> stack{{RatInterval{cover.a_m, cover.b_m}, 0}};
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        if (nd.depth == n) {
            ++count;
            continue;
        }
        // symbol 0: survive in [a_m, a]
        {
            Rational lo = std::max(nd.iv.lo, cover.a_m);
            Rational hi = std::min(nd.iv.hi, a);
            if (lo < hi) {
                Rational u = cover.left(lo), v = cover.left(hi);
                if (u > v) std::swap(u, v);
                stack.push_back({RatInterval{u, v}, nd.depth + 1});
            }
        }
        // symbol 1: survive in [b, b_m]
        {
            Rational lo = std::max(nd.iv.lo, b);
            Rational hi = std::min(nd.iv.hi, cover.b_m);
            if (lo < hi) {
                Rational u = cover.right(lo), v = cover.right(hi);
                if (u > v) std::swap(u, v);
                stack.push_back({RatInterval{u, v}, nd.depth + 1});
            }
        }
    }
    return count;
}

DimensionResult cylinder_dimension(const DoubleCover& cover, const Rational& a, const Rational& b, int n) {
    std::uint64_t nn = cylinder_count(cover, a, b, n);
    DimensionResult r;
    r.method = DimensionResult::Method::cylinder_count;
    r.n = n;
    r.matrix_size = 0;
    r.positive = nn > 1;
    r.value = nn == 0 ? 0.0 : std::log(double(nn)) / (n * std::log(double(cover.lambda)));
    r.bound = 1.0 / double(n);  // first-order finite-size error scale
    return r;
}

BigInt closed_walk_count(const MarkovSystem& sys, int p) {
    size_t n = sys.node_count();
    if (n == 0 || p < 1) return 0;
    // column-by-column power: trace(A^p)
    std::vector<std::vector<BigInt>> mat(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (int j : sys.adjacency[i]) mat[i][size_t(j)] = 1;
    std::vector<std::vector<BigInt>> pow = mat;
    for (int k = 1; k < p; ++k) {
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (pow[i][j] == 0) continue;
                for (int t : sys.adjacency[size_t(j)]) next[i][size_t(t)] += pow[i][j];
            }
        pow.swap(next);
    }
    BigInt tr = 0;
    for (size_t i = 0; i < n; ++i) tr += pow[i][i];
    return tr;
}

bool has_period(const MarkovSystem& sys, int p) {
    if (p < 1) return false;
    // Moebius inversion over divisors of p
    BigInt total = 0;
    for (int d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        int q = p / d, mu = 1, m = q;
        for (int f = 2; f * f <= m; ++f) {
            if (m % f == 0) {
                m /= f;
                if (m % f == 0) { mu = 0; break; }
                mu = -mu;
            }
        }
        if (m > 1 && mu != 0) mu = -mu;
        if (mu == 0) continue;
        total += mu * closed_walk_count(sys, d);
    }
    return total > 0;
}

std::string matrix_triplets(const MarkovSystem& sys) {
    std::ostringstream os;
    for (size_t i = 0; i < sys.node_count(); ++i)
        for (int j : sys.adjacency[i]) os << i << " " << j << " 1\n";
    return os.str();
}

std::string partition_endpoints(const MarkovSystem& sys) {
    std::ostringstream os;
    for (size_t i = 0; i < sys.points.size(); ++i) {
        if (i) os << " ";
        os << to_string(sys.points[i]);
    }
    os << "\n";
    return os.str();
}

}  // namespace plateau
