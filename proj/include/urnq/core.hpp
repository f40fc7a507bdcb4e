#ifndef URNQ_CORE_HPP
#define URNQ_CORE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "urnq/bigint.hpp"

namespace urnq {

using BallId = int;
using Edge = std::pair<BallId, BallId>;  // stored with first < second

/// Thrown when a brute-force enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n balls, each with an exact positive integer weight.
/// Unweighted problems use all-ones.
class WeightedInstance {
public:
    explicit WeightedInstance(std::vector<BigInt> weights);
    static WeightedInstance unit(int n);

    int size() const { return static_cast<int>(weights_.size()); }
    const BigInt& weight(BallId b) const { return weights_.at(static_cast<std::size_t>(b)); }
    const std::vector<BigInt>& weights() const { return weights_; }
    const BigInt& total() const { return total_; }
    bool is_unit() const;

private:
    std::vector<BigInt> weights_;
    BigInt total_;
};

/// Simple undirected graph on balls 0..n-1: the non-adaptive query set.
class QueryGraph {
public:
    QueryGraph(int n, std::vector<Edge> edges);
    static QueryGraph empty_graph(int n);
    static QueryGraph complete_graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(BallId u, BallId v) const { return edge_index(u, v) >= 0; }
    /// Position of (u,v) in edges(), or -1.
    int edge_index(BallId u, BallId v) const;
    int degree(BallId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int min_degree() const;
    const std::vector<BallId>& neighbors(BallId v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool is_complete() const;
    bool operator==(const QueryGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;                // sorted lexicographically
    std::vector<std::vector<BallId>> adj_;
};

/// Unordered partition of [0,n) into non-empty blocks. Canonical form orders
/// blocks by minimum element; equality is partition equality, labels carry no
/// meaning (queries only ever reveal equality of colors).
class Coloring {
public:
    static Coloring from_blocks(int n, const std::vector<std::vector<BallId>>& blocks);
    /// block_of[i] = any label for ball i; labels are normalized away.
    static Coloring from_assignment(const std::vector<int>& block_of);

    int ball_count() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<BallId>>& blocks() const { return blocks_; }
    /// Canonical restricted-growth string: rgs[i] = index of ball i's block.
    const std::vector<int>& assignment() const { return rgs_; }
    int block_of(BallId b) const { return rgs_[static_cast<std::size_t>(b)]; }
    bool same_block(BallId u, BallId v) const {
        return rgs_[static_cast<std::size_t>(u)] == rgs_[static_cast<std::size_t>(v)];
    }
    bool operator==(const Coloring& o) const { return rgs_ == o.rgs_; }
    bool operator<(const Coloring& o) const { return rgs_ < o.rgs_; }
    /// Block notation, e.g. {{0,1},{2}}.
    std::string to_string() const;

private:
    std::vector<int> rgs_;
    std::vector<std::vector<BallId>> blocks_;
};

enum class Answer : std::uint8_t { Same, Different };

/// SAME/DIFFERENT verdict for every edge of one query graph.
/// The domain is exactly the edge set of the graph it was built against.
class AnswerMap {
public:
    AnswerMap(std::vector<Edge> edges, std::vector<Answer> answers);
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Answer>& answers() const { return answers_; }
    Answer at(BallId u, BallId v) const;
    bool matches_domain(const QueryGraph& g) const { return edges_ == g.edges(); }
    bool operator==(const AnswerMap& o) const { return edges_ == o.edges_ && answers_ == o.answers_; }

private:
    std::vector<Edge> edges_;     // sorted, mirrors the graph's order
    std::vector<Answer> answers_;
};

enum class ProblemKind { Majority, KMajority, Plurality, FixedBallKMajority };

/// Problem kind + color budget + exact integer weights.
struct ProblemSpec {
    ProblemKind kind;
    int color_budget;  // c >= 2
    WeightedInstance instance;
    BigInt k;                // weight threshold (KMajority / FixedBallKMajority)
    BallId fixed_ball = -1;  // FixedBallKMajority only

    static ProblemSpec majority(WeightedInstance instance, int c);
    static ProblemSpec k_majority(WeightedInstance instance, int c, BigInt k);
    static ProblemSpec plurality(WeightedInstance instance, int c);
    static ProblemSpec fixed_ball_k_majority(WeightedInstance instance, int c, BigInt k, BallId ball);

    int ball_count() const { return instance.size(); }
};

/// Either NoTarget or Witness(ball).
struct Verdict {
    BallId ball = -1;  // -1 encodes NoTarget
    bool has_witness() const { return ball >= 0; }
    static Verdict no_target() { return Verdict{}; }
    static Verdict witness(BallId b) { return Verdict{b}; }
    bool operator==(const Verdict& o) const { return ball == o.ball; }
    std::string to_string() const;
};

/// Every partition of [0,n) into at most c non-empty blocks, exactly once,
/// in restricted-growth-string order.
std::vector<Coloring> enumerate_colorings(int n, int c);

/// Callback form of the above; hands out the canonical RGS and its block count.
void for_each_assignment(int n, int c,
                         const std::function<void(const std::vector<int>&, int)>& fn);

/// Sum of Stirling numbers S(n,i) for i <= c: how many colorings enumeration yields.
BigInt coloring_count(int n, int c);

/// Edge (u,v) answers Same iff u and v share a block.
AnswerMap answers_for(const QueryGraph& g, const Coloring& coloring);

/// Bitmask of qualifying blocks given per-block weights.
/// fixed_ball_block is the block index of the fixed ball (FixedBallKMajority only).
std::uint32_t target_block_mask(const ProblemSpec& problem,
                                const std::vector<BigInt>& block_weights,
                                int fixed_ball_block = -1);

/// Target set of balls (sorted), possibly empty.
std::vector<BallId> evaluate(const ProblemSpec& problem, const Coloring& coloring);

/// Exactly the colorings with <= c blocks whose answers_for equals `answers`,
/// in a deterministic order. Implemented by SAME-edge contraction followed by
/// enumeration over the contracted vertices respecting DIFFERENT constraints.
/// Returns an empty sequence when the answers are inconsistent.
std::vector<Coloring> consistent_colorings(const QueryGraph& g, const AnswerMap& answers, int c);

}  // namespace urnq

#endif
