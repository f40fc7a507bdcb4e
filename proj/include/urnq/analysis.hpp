#ifndef URNQ_ANALYSIS_HPP
#define URNQ_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "urnq/constructions.hpp"
#include "urnq/core.hpp"

namespace urnq {

enum class ConflictKind { ExistenceConflict, EmptyWitnessIntersection };

/// A certificate that a query graph fails: colorings that produce identical
/// answers yet admit no single correct output.
struct FoolingEvidence {
    std::vector<Coloring> colorings;
    ConflictKind kind = ConflictKind::ExistenceConflict;
};

struct SolveReport {
    bool solves = false;
    std::optional<FoolingEvidence> evidence;  // present iff solves == false
};

struct SolveOptions {
    BigInt coloring_cap = 1000000;
};

/// Minimum vertex cut size; K_n reports n-1. Exact, via unit-capacity
/// max-flow over all non-adjacent pairs.
int vertex_connectivity(const QueryGraph& g);

/// Brute-force oracle: groups every coloring with <= c blocks by its answer
/// map; the graph solves the problem iff every group either has all-empty
/// target sets or a non-empty intersection of target sets.
SolveReport solves(const QueryGraph& g, const ProblemSpec& problem, const SolveOptions& opts = {});

/// All inclusion-minimal sets F with w(F) >= k, in lexicographic order.
/// Requires that no single ball reaches weight k, and n <= 20.
std::vector<std::vector<BallId>> minimal_kmajority_sets(const WeightedInstance& instance,
                                                        const BigInt& k);

/// Sufficient condition for k-majority: every minimal k-majority set induces
/// a connected subgraph. Accepts Majority problems by converting the threshold.
bool check_sufficient(const QueryGraph& g, const ProblemSpec& problem);

struct NecessaryReport {
    bool applicable = false;  // a necessary condition exists for this problem kind
    bool precondition_holds = false;
    bool conclusion_holds = false;
    std::string note;
};

/// Evaluates the applicable necessary condition: connected minimal sets
/// (weighted k-majority), (n-k+1)-connectivity (unit k-majority), or the
/// plurality minimum-degree threshold with its n-1 = 1 (mod c-1) special case.
NecessaryReport check_necessary(const QueryGraph& g, const ProblemSpec& problem);

/// Majority expressed as a weight threshold: w(C) > w/2 iff w(C) >= floor(w/2)+1.
BigInt majority_threshold(const WeightedInstance& instance);

enum class DecodeStatus { NoTarget, Witness, Undecidable };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Undecidable;
    BallId ball = -1;  // set iff status == Witness
    std::string to_string() const;
};

/// Reference decoder over the consistent-coloring semantics. Undecidable
/// means the graph does not solve the problem on this branch.
DecodeResult decode(const QueryGraph& g, const AnswerMap& answers, const ProblemSpec& problem);

/// Polynomial-time decoder for the TuranCycles / WeightedPlurality schemes,
/// following the constructions' case analysis. Agrees with decode on every
/// answer map that arises from a real coloring within budget.
Verdict decode_structured(const SchemeDescriptor& desc, const AnswerMap& answers,
                          const ProblemSpec& problem);

/// Self-check for adversary outputs: identical answer maps, within budget,
/// and a genuine conflict of the declared kind.
bool evidence_is_valid(const QueryGraph& g, const ProblemSpec& problem,
                       const FoolingEvidence& ev);

}  // namespace urnq

#endif
