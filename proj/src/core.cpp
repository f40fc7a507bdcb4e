#include "urnq/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace urnq {

WeightedInstance::WeightedInstance(std::vector<BigInt> weights) : weights_(std::move(weights)) {
    total_ = 0;
    for (const BigInt& w : weights_) {
        if (w <= 0) throw std::invalid_argument("WeightedInstance: weights must be positive");
        total_ += w;
    }
}

WeightedInstance WeightedInstance::unit(int n) {
    if (n < 0) throw std::invalid_argument("WeightedInstance::unit: n must be >= 0");
    return WeightedInstance(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

bool WeightedInstance::is_unit() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const BigInt& w) { return w == 1; });
}

QueryGraph::QueryGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("QueryGraph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) throw std::invalid_argument("QueryGraph: loop edge");
        if (e.first < 0 || e.second >= n_) throw std::invalid_argument("QueryGraph: endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("QueryGraph: duplicate edge");
    }
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

QueryGraph QueryGraph::empty_graph(int n) { return QueryGraph(n, {}); }

QueryGraph QueryGraph::complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return QueryGraph(n, std::move(edges));
}

int QueryGraph::edge_index(BallId u, BallId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

int QueryGraph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool QueryGraph::is_complete() const {
    return static_cast<long long>(edges_.size()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

namespace {

std::vector<int> normalize_rgs(const std::vector<int>& labels) {
    std::vector<int> out(labels.size());
    std::vector<int> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int lab = labels[i];
        auto it = std::find(remap.begin(), remap.end(), lab);
        if (it == remap.end()) {
            remap.push_back(lab);
            out[i] = static_cast<int>(remap.size()) - 1;
        } else {
            out[i] = static_cast<int>(it - remap.begin());
        }
    }
    return out;
}

}  // namespace

Coloring Coloring::from_assignment(const std::vector<int>& block_of) {
    Coloring c;
    c.rgs_ = normalize_rgs(block_of);
    int nblocks = c.rgs_.empty() ? 0 : *std::max_element(c.rgs_.begin(), c.rgs_.end()) + 1;
    c.blocks_.assign(static_cast<std::size_t>(nblocks), {});
    for (std::size_t i = 0; i < c.rgs_.size(); ++i) {
        c.blocks_[static_cast<std::size_t>(c.rgs_[i])].push_back(static_cast<BallId>(i));
    }
    return c;
}

Coloring Coloring::from_blocks(int n, const std::vector<std::vector<BallId>>& blocks) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("Coloring: empty block");
        for (BallId ball : blocks[b]) {
            if (ball < 0 || ball >= n) throw std::invalid_argument("Coloring: ball out of range");
            if (labels[static_cast<std::size_t>(ball)] != -1)
                throw std::invalid_argument("Coloring: blocks are not disjoint");
            labels[static_cast<std::size_t>(ball)] = static_cast<int>(b);
        }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw std::invalid_argument("Coloring: blocks do not cover [0,n)");
    return from_assignment(labels);
}

std::string Coloring::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << ',';
        os << '{';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) os << ',';
            os << blocks_[b][i];
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

AnswerMap::AnswerMap(std::vector<Edge> edges, std::vector<Answer> answers)
    : edges_(std::move(edges)), answers_(std::move(answers)) {
    if (edges_.size() != answers_.size())
        throw std::invalid_argument("AnswerMap: edge/answer size mismatch");
    if (!std::is_sorted(edges_.begin(), edges_.end()))
        throw std::invalid_argument("AnswerMap: edges must be sorted");
}

Answer AnswerMap::at(BallId u, BallId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        throw std::invalid_argument("AnswerMap: edge not in domain");
    return answers_[static_cast<std::size_t>(it - edges_.begin())];
}

ProblemSpec ProblemSpec::majority(WeightedInstance instance, int c) {
    if (c < 2) throw std::invalid_argument("ProblemSpec: color budget must be >= 2");
    return ProblemSpec{ProblemKind::Majority, c, std::move(instance), 0, -1};
}

ProblemSpec ProblemSpec::k_majority(WeightedInstance instance, int c, BigInt k) {
    if (c < 2) throw std::invalid_argument("ProblemSpec: color budget must be >= 2");
    if (k <= 0 || k > instance.total())
        throw std::invalid_argument("ProblemSpec: k must satisfy 0 < k <= w(S)");
    return ProblemSpec{ProblemKind::KMajority, c, std::move(instance), std::move(k), -1};
}

ProblemSpec ProblemSpec::plurality(WeightedInstance instance, int c) {
    if (c < 2) throw std::invalid_argument("ProblemSpec: color budget must be >= 2");
    return ProblemSpec{ProblemKind::Plurality, c, std::move(instance), 0, -1};
}

ProblemSpec ProblemSpec::fixed_ball_k_majority(WeightedInstance instance, int c, BigInt k, BallId ball) {
    if (c < 2) throw std::invalid_argument("ProblemSpec: color budget must be >= 2");
    if (k <= 0 || k > instance.total())
        throw std::invalid_argument("ProblemSpec: k must satisfy 0 < k <= w(S)");
    if (ball < 0 || ball >= instance.size())
        throw std::invalid_argument("ProblemSpec: fixed ball out of range");
    return ProblemSpec{ProblemKind::FixedBallKMajority, c, std::move(instance), std::move(k), ball};
}

std::string Verdict::to_string() const {
    if (!has_witness()) return "NO-TARGET";
    return "WITNESS " + std::to_string(ball);
}

void for_each_assignment(int n, int c,
                         const std::function<void(const std::vector<int>&, int)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_assignment: n must be >= 0");
    if (c < 1) throw std::invalid_argument("for_each_assignment: c must be >= 1");
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        fn(rgs, 0);
        return;
    }
    // Depth-first generation of restricted growth strings with < c symbols,
    // which is exactly lexicographic RGS order.
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            fn(rgs, used);
            return;
        }
        int limit = std::min(used, c - 1);
        for (int lab = 0; lab <= limit; ++lab) {
            rgs[static_cast<std::size_t>(pos)] = lab;
            rec(pos + 1, std::max(used, lab + 1));
        }
    };
    rec(0, 0);
}

std::vector<Coloring> enumerate_colorings(int n, int c) {
    std::vector<Coloring> out;
    for_each_assignment(n, c, [&](const std::vector<int>& rgs, int) {
        out.push_back(Coloring::from_assignment(rgs));
    });
    return out;
}

BigInt coloring_count(int n, int c) {
    // Stirling numbers of the second kind, summed over block counts <= c.
    std::vector<BigInt> row{1};  // S(0, 0..)
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, 0);
        for (int j = 1; j <= i; ++j) {
            BigInt a = (j <= static_cast<int>(row.size()) - 1) ? row[static_cast<std::size_t>(j)] : 0;
            BigInt b = (j - 1 <= static_cast<int>(row.size()) - 1) ? row[static_cast<std::size_t>(j - 1)] : 0;
            next[static_cast<std::size_t>(j)] = BigInt(j) * a + b;
        }
        row = std::move(next);
    }
    BigInt total = 0;
    for (int j = 1; j <= std::min(n, c); ++j) total += row[static_cast<std::size_t>(j)];
    if (n == 0) total = 1;
    return total;
}

AnswerMap answers_for(const QueryGraph& g, const Coloring& coloring) {
    if (coloring.ball_count() != g.vertex_count())
        throw std::invalid_argument("answers_for: coloring does not cover the vertex set");
    std::vector<Answer> answers;
    answers.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        answers.push_back(coloring.same_block(e.first, e.second) ? Answer::Same : Answer::Different);
    }
    return AnswerMap(g.edges(), std::move(answers));
}

std::uint32_t target_block_mask(const ProblemSpec& problem,
                                const std::vector<BigInt>& block_weights,
                                int fixed_ball_block) {
    const std::size_t nblocks = block_weights.size();
    if (nblocks > 32) throw std::invalid_argument("target_block_mask: too many blocks");
    std::uint32_t mask = 0;
    switch (problem.kind) {
        case ProblemKind::Majority: {
            const BigInt& total = problem.instance.total();
            for (std::size_t b = 0; b < nblocks; ++b) {
                if (2 * block_weights[b] > total) mask |= 1u << b;  // at most one block qualifies
            }
            break;
        }
        case ProblemKind::KMajority: {
            for (std::size_t b = 0; b < nblocks; ++b) {
                if (block_weights[b] >= problem.k) mask |= 1u << b;
            }
            break;
        }
        case ProblemKind::Plurality: {
            if (nblocks == 0) break;
            std::size_t best = 0;
            bool unique = true;
            for (std::size_t b = 1; b < nblocks; ++b) {
                if (block_weights[b] > block_weights[best]) {
                    best = b;
                    unique = true;
                } else if (block_weights[b] == block_weights[best]) {
                    unique = false;
                }
            }
            if (unique) mask |= 1u << best;
            break;
        }
        case ProblemKind::FixedBallKMajority: {
            if (fixed_ball_block < 0)
                throw std::invalid_argument("target_block_mask: fixed ball block required");
            if (block_weights[static_cast<std::size_t>(fixed_ball_block)] >= problem.k)
                mask |= 1u << fixed_ball_block;
            break;
        }
    }
    return mask;
}

std::vector<BallId> evaluate(const ProblemSpec& problem, const Coloring& coloring) {
    if (coloring.ball_count() != problem.ball_count())
        throw std::invalid_argument("evaluate: coloring size mismatch");
    if (coloring.block_count() > problem.color_budget)
        throw std::invalid_argument("evaluate: coloring exceeds color budget");
    std::vector<BigInt> weights(static_cast<std::size_t>(coloring.block_count()), 0);
    for (BallId ball = 0; ball < coloring.ball_count(); ++ball) {
        weights[static_cast<std::size_t>(coloring.block_of(ball))] += problem.instance.weight(ball);
    }
    int fb_block = problem.kind == ProblemKind::FixedBallKMajority
                       ? coloring.block_of(problem.fixed_ball)
                       : -1;
    std::uint32_t mask = target_block_mask(problem, weights, fb_block);
    std::vector<BallId> target;
    if (problem.kind == ProblemKind::FixedBallKMajority) {
        if (mask) target.push_back(problem.fixed_ball);
        return target;
    }
    for (int b = 0; b < coloring.block_count(); ++b) {
        if (mask & (1u << b)) {
            const auto& blk = coloring.blocks()[static_cast<std::size_t>(b)];
            target.insert(target.end(), blk.begin(), blk.end());
        }
    }
    std::sort(target.begin(), target.end());
    return target;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<Coloring> consistent_colorings(const QueryGraph& g, const AnswerMap& answers, int c) {
    if (!answers.matches_domain(g))
        throw std::invalid_argument("consistent_colorings: answer domain mismatch");
    if (c < 1) throw std::invalid_argument("consistent_colorings: c must be >= 1");
    const int n = g.vertex_count();

    Dsu dsu(n);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (answers.answers()[i] == Answer::Same) {
            dsu.unite(g.edges()[i].first, g.edges()[i].second);
        }
    }
    // Super-vertices ordered by their minimum ball.
    std::vector<int> super_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<BallId>> members;
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (super_of[static_cast<std::size_t>(r)] == -1) {
            super_of[static_cast<std::size_t>(r)] = static_cast<int>(members.size());
            members.push_back({});
        }
        super_of[static_cast<std::size_t>(v)] = super_of[static_cast<std::size_t>(r)];
        members[static_cast<std::size_t>(super_of[static_cast<std::size_t>(v)])].push_back(v);
    }
    const int m = static_cast<int>(members.size());

    // DIFFERENT constraints between super-vertices; a self-loop means inconsistency.
    std::vector<std::vector<char>> conflict(static_cast<std::size_t>(m),
                                            std::vector<char>(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (answers.answers()[i] == Answer::Different) {
            int a = super_of[static_cast<std::size_t>(g.edges()[i].first)];
            int b = super_of[static_cast<std::size_t>(g.edges()[i].second)];
            if (a == b) return {};
            conflict[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
            conflict[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
        }
    }

    std::vector<Coloring> out;
    std::vector<int> super_label(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == m) {
            std::vector<int> labels(static_cast<std::size_t>(n));
            for (int s = 0; s < m; ++s) {
                for (BallId ball : members[static_cast<std::size_t>(s)]) {
                    labels[static_cast<std::size_t>(ball)] = super_label[static_cast<std::size_t>(s)];
                }
            }
            out.push_back(Coloring::from_assignment(labels));
            return;
        }
        int limit = std::min(used, c - 1);
        for (int lab = 0; lab <= limit; ++lab) {
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (super_label[static_cast<std::size_t>(prev)] == lab &&
                    conflict[static_cast<std::size_t>(prev)][static_cast<std::size_t>(pos)]) {
                    ok = false;
                }
            }
            if (!ok) continue;
            super_label[static_cast<std::size_t>(pos)] = lab;
            rec(pos + 1, std::max(used, lab + 1));
        }
    };
    if (n == 0) {
        out.push_back(Coloring::from_assignment({}));
        return out;
    }
    rec(0, 0);
    return out;
}

}  // namespace urnq
