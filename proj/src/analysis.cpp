#include "urnq/analysis.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>

namespace urnq {

namespace {

// Unit-capacity max-flow on the vertex-split network: number of internally
// vertex-disjoint s-t paths. Plenty fast at the instance sizes we care about.
int vertex_disjoint_paths(const QueryGraph& g, int s, int t) {
    const int n = g.vertex_count();
    const int nodes = 2 * n;  // v_in = 2v, v_out = 2v+1
    const int INF = 1 << 28;
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> net(static_cast<std::size_t>(nodes));
    auto add_arc = [&](int a, int b, int cap) {
        net[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(net[static_cast<std::size_t>(b)].size())});
        net[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(net[static_cast<std::size_t>(a)].size()) - 1});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? INF : 1);
    for (const Edge& e : g.edges()) {
        add_arc(2 * e.first + 1, 2 * e.second, INF);
        add_arc(2 * e.second + 1, 2 * e.first, INF);
    }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev_node(static_cast<std::size_t>(nodes), -1);
        std::vector<int> prev_arc(static_cast<std::size_t>(nodes), -1);
        std::deque<int> queue{source};
        prev_node[static_cast<std::size_t>(source)] = source;
        while (!queue.empty() && prev_node[static_cast<std::size_t>(sink)] == -1) {
            int u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < net[static_cast<std::size_t>(u)].size(); ++i) {
                const Arc& a = net[static_cast<std::size_t>(u)][i];
                if (a.cap > 0 && prev_node[static_cast<std::size_t>(a.to)] == -1) {
                    prev_node[static_cast<std::size_t>(a.to)] = u;
                    prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                    queue.push_back(a.to);
                }
            }
        }
        if (prev_node[static_cast<std::size_t>(sink)] == -1) break;
        for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
            Arc& a = net[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                        [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
            a.cap -= 1;
            net[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)].cap += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const QueryGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, vertex_disjoint_paths(g, s, t));
            if (best == 0) return 0;
        }
    }
    return best;
}

namespace {

struct GroupState {
    bool any_empty = false;
    bool any_nonempty = false;
    std::uint64_t intersection = ~0ull;  // over non-empty targets
    bool decidable() const {
        if (!any_nonempty) return true;            // all target sets empty
        if (any_empty) return false;               // existence conflict
        return intersection != 0;                  // shared witness
    }
};

// Packed SAME-bitmask of a coloring over the graph's edge list.
std::string answer_key(const QueryGraph& g, const std::vector<int>& rgs) {
    std::string key(static_cast<std::size_t>((g.edge_count() + 7) / 8), '\0');
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (rgs[static_cast<std::size_t>(e.first)] == rgs[static_cast<std::size_t>(e.second)]) {
            key[i / 8] = static_cast<char>(key[i / 8] | (1 << (i % 8)));
        }
    }
    return key;
}

}  // namespace

SolveReport solves(const QueryGraph& g, const ProblemSpec& problem, const SolveOptions& opts) {
    const int n = problem.ball_count();
    if (g.vertex_count() != n) throw std::invalid_argument("solves: graph/instance size mismatch");
    if (n > 25) throw std::invalid_argument("solves: instance too large for enumeration");
    const int c = problem.color_budget;
    if (coloring_count(n, c) > opts.coloring_cap)
        throw CapExceeded("solves: coloring enumeration exceeds cap");

    std::map<std::string, GroupState> groups;
    std::vector<BigInt> weights_scratch;
    for_each_assignment(n, c, [&](const std::vector<int>& rgs, int nblocks) {
        weights_scratch.assign(static_cast<std::size_t>(nblocks), BigInt(0));
        for (int ball = 0; ball < n; ++ball) {
            weights_scratch[static_cast<std::size_t>(rgs[static_cast<std::size_t>(ball)])] +=
                problem.instance.weight(ball);
        }
        int fb_block = problem.kind == ProblemKind::FixedBallKMajority
                           ? rgs[static_cast<std::size_t>(problem.fixed_ball)]
                           : -1;
        std::uint32_t block_mask = target_block_mask(problem, weights_scratch, fb_block);
        std::uint64_t ball_mask = 0;
        if (problem.kind == ProblemKind::FixedBallKMajority) {
            if (block_mask) ball_mask = 1ull << problem.fixed_ball;
        } else {
            for (int ball = 0; ball < n; ++ball) {
                if (block_mask & (1u << rgs[static_cast<std::size_t>(ball)])) ball_mask |= 1ull << ball;
            }
        }
        GroupState& gs = groups[answer_key(g, rgs)];
        if (ball_mask == 0) {
            gs.any_empty = true;
        } else {
            gs.any_nonempty = true;
            gs.intersection &= ball_mask;
        }
    });

    // Deterministic pick: the first undecidable answer class in key order.
    const std::string* bad_key = nullptr;
    for (const auto& [key, gs] : groups) {
        if (!gs.decidable()) {
            bad_key = &key;
            break;
        }
    }
    if (!bad_key) return SolveReport{true, std::nullopt};

    const GroupState& bad = groups.at(*bad_key);
    FoolingEvidence ev;
    ev.kind = bad.any_empty ? ConflictKind::ExistenceConflict
                            : ConflictKind::EmptyWitnessIntersection;
    // Second pass: collect a small certifying subset of the offending class.
    bool have_empty = false, have_nonempty = false;
    std::uint64_t running = ~0ull;
    for_each_assignment(n, c, [&](const std::vector<int>& rgs, int) {
        if (answer_key(g, rgs) != *bad_key) return;
        Coloring col = Coloring::from_assignment(rgs);
        auto target = evaluate(problem, col);
        if (ev.kind == ConflictKind::ExistenceConflict) {
            if (target.empty() && !have_empty) {
                have_empty = true;
                ev.colorings.push_back(col);
            } else if (!target.empty() && !have_nonempty) {
                have_nonempty = true;
                ev.colorings.push_back(col);
            }
        } else {
            std::uint64_t mask = 0;
            for (BallId b : target) mask |= 1ull << b;
            if ((running & mask) != running) {
                running &= mask;
                ev.colorings.push_back(col);
            }
        }
    });
    return SolveReport{false, std::move(ev)};
}

std::vector<std::vector<BallId>> minimal_kmajority_sets(const WeightedInstance& instance,
                                                        const BigInt& k) {
    const int n = instance.size();
    if (n > 20) throw std::invalid_argument("minimal_kmajority_sets: n too large");
    for (int b = 0; b < n; ++b) {
        if (instance.weight(b) >= k)
            throw std::domain_error("minimal_kmajority_sets: a single ball reaches the threshold");
    }
    std::vector<std::vector<BallId>> out;
    std::vector<BallId> current;
    BigInt sum = 0, min_in = 0;
    // Lexicographic DFS; a set whose weight reached k has no minimal superset,
    // and no prefix of a minimal set reaches k, so pruning at >= k is exact.
    std::function<void(int)> rec = [&](int next) {
        if (sum >= k) {
            if (sum - min_in < k) out.push_back(current);
            return;
        }
        for (int b = next; b < n; ++b) {
            current.push_back(b);
            BigInt prev_min = min_in;
            min_in = current.size() == 1 ? instance.weight(b) : std::min(min_in, instance.weight(b));
            sum += instance.weight(b);
            rec(b + 1);
            sum -= instance.weight(b);
            min_in = prev_min;
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

bool induces_connected(const QueryGraph& g, const std::vector<BallId>& set) {
    if (set.empty()) return true;
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (BallId b : set) in_set[static_cast<std::size_t>(b)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::deque<BallId> queue{set.front()};
    seen[static_cast<std::size_t>(set.front())] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
        BallId u = queue.front();
        queue.pop_front();
        ++reached;
        for (BallId v : g.neighbors(u)) {
            if (in_set[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
    }
    return reached == set.size();
}

}  // namespace

BigInt majority_threshold(const WeightedInstance& instance) {
    return instance.total() / 2 + 1;
}

bool check_sufficient(const QueryGraph& g, const ProblemSpec& problem) {
    BigInt k;
    if (problem.kind == ProblemKind::KMajority) {
        k = problem.k;
    } else if (problem.kind == ProblemKind::Majority) {
        k = majority_threshold(problem.instance);
    } else {
        throw std::invalid_argument("check_sufficient: k-majority problems only");
    }
    for (const auto& f : minimal_kmajority_sets(problem.instance, k)) {
        if (!induces_connected(g, f)) return false;
    }
    return true;
}

NecessaryReport check_necessary(const QueryGraph& g, const ProblemSpec& problem) {
    NecessaryReport report;
    const int n = problem.ball_count();
    const int c = problem.color_budget;
    switch (problem.kind) {
        case ProblemKind::Plurality: {
            if (c < 3 || !problem.instance.is_unit()) {
                report.note = "min-degree condition covers the unweighted case with c >= 3";
                return report;
            }
            report.applicable = true;
            report.precondition_holds = true;
            int per = (n - 1) / (c - 1);
            int threshold;
            if ((n - 1) % (c - 1) == 1) {
                threshold = n - 1 - per;  // floor branch
                report.note = "n-1 = 1 (mod c-1): min degree must exceed " + std::to_string(threshold);
            } else {
                int ceil_per = ((n - 1) + (c - 2)) / (c - 1);
                threshold = n - 1 - ceil_per;
                report.note = "min degree must exceed " + std::to_string(threshold);
            }
            report.conclusion_holds = g.min_degree() > threshold;
            return report;
        }
        case ProblemKind::Majority:
        case ProblemKind::KMajority: {
            BigInt k = problem.kind == ProblemKind::Majority ? majority_threshold(problem.instance)
                                                             : problem.k;
            BigInt max_w = 0;
            for (const BigInt& w : problem.instance.weights()) max_w = std::max(max_w, w);
            report.applicable = true;
            if (problem.instance.is_unit()) {
                report.precondition_holds =
                    c > 2 && max_w < k && BigInt(n) <= BigInt(c) * k - k - c + 2;
                int kk = static_cast<int>(k);
                report.conclusion_holds = vertex_connectivity(g) >= n - kk + 1;
                report.note = "unit weights: conclusion is (n-k+1)-connectivity";
            } else {
                report.precondition_holds =
                    c > 2 && max_w < k && 2 * problem.instance.total() < (k + 1) * (c + 1) - 2;
                bool all_connected = true;
                for (const auto& f : minimal_kmajority_sets(problem.instance, k)) {
                    if (!induces_connected(g, f)) {
                        all_connected = false;
                        break;
                    }
                }
                report.conclusion_holds = all_connected;
                report.note = "weighted: conclusion is connectivity of every minimal k-majority set";
            }
            return report;
        }
        case ProblemKind::FixedBallKMajority: {
            report.note = "no necessary condition implemented for fixed-ball problems";
            return report;
        }
    }
    return report;
}

std::string DecodeResult::to_string() const {
    switch (status) {
        case DecodeStatus::NoTarget: return "NO-TARGET";
        case DecodeStatus::Witness: return "WITNESS " + std::to_string(ball);
        case DecodeStatus::Undecidable: return "UNDECIDABLE";
    }
    return "?";
}

DecodeResult decode(const QueryGraph& g, const AnswerMap& answers, const ProblemSpec& problem) {
    auto cols = consistent_colorings(g, answers, problem.color_budget);
    if (cols.empty()) throw std::invalid_argument("decode: inconsistent answer map");
    bool any_nonempty = false, any_empty = false;
    std::vector<BallId> common;
    bool first = true;
    for (const Coloring& col : cols) {
        auto target = evaluate(problem, col);
        if (target.empty()) {
            any_empty = true;
            continue;
        }
        any_nonempty = true;
        if (first) {
            common = target;
            first = false;
        } else {
            std::vector<BallId> merged;
            std::set_intersection(common.begin(), common.end(), target.begin(), target.end(),
                                  std::back_inserter(merged));
            common = std::move(merged);
        }
    }
    if (!any_nonempty) return DecodeResult{DecodeStatus::NoTarget, -1};
    if (!any_empty && !common.empty()) return DecodeResult{DecodeStatus::Witness, common.front()};
    return DecodeResult{DecodeStatus::Undecidable, -1};
}

bool evidence_is_valid(const QueryGraph& g, const ProblemSpec& problem,
                       const FoolingEvidence& ev) {
    if (ev.colorings.size() < 2) return false;
    std::optional<AnswerMap> reference;
    for (const Coloring& col : ev.colorings) {
        if (col.ball_count() != g.vertex_count()) return false;
        if (col.block_count() > problem.color_budget) return false;
        AnswerMap am = answers_for(g, col);
        if (!reference) {
            reference = std::move(am);
        } else if (!(am == *reference)) {
            return false;
        }
    }
    bool any_empty = false, any_nonempty = false;
    std::vector<BallId> common;
    bool first = true;
    for (const Coloring& col : ev.colorings) {
        auto target = evaluate(problem, col);
        if (target.empty()) {
            any_empty = true;
            continue;
        }
        any_nonempty = true;
        if (first) {
            common = target;
            first = false;
        } else {
            std::vector<BallId> merged;
            std::set_intersection(common.begin(), common.end(), target.begin(), target.end(),
                                  std::back_inserter(merged));
            common = std::move(merged);
        }
    }
    if (ev.kind == ConflictKind::ExistenceConflict) return any_empty && any_nonempty;
    return !any_empty && any_nonempty && common.empty();
}

}  // namespace urnq
