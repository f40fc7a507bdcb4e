#ifndef URNQ_CONSTRUCTIONS_HPP
#define URNQ_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "urnq/core.hpp"

namespace urnq {

enum class SchemeFamily { Harary, TuranCycles, C3Even, C3Odd, WeightedPlurality };

std::string family_name(SchemeFamily family);

/// Records which construction produced a graph, plus the part structure for
/// the partite families so that the structured decoders can exploit it.
struct SchemeDescriptor {
    SchemeFamily family;
    int n = 0;
    int k = 0;  // connectivity (Harary) or unused
    int c = 0;  // color budget the scheme targets, 0 when not applicable
    std::vector<std::vector<BallId>> parts;  // partition of [0,n) for partite families
};

/// The minimal j-connected graph on n vertices: the circulant construction
/// with exactly ceil(j*n/2) edges and vertex connectivity exactly j.
QueryGraph harary_graph(int n, int j);

/// Query graph solving the k-majority problem with c > 2 colors and unit
/// weights: the minimal (n-k+1)-connected graph. Requires n > k > n/2.
QueryGraph kmajority_graph(int n, int k);

/// (c-1)-partite Turan graph with a spanning cycle added to every part.
/// Parts are consecutive index ranges, larger parts first.
std::pair<QueryGraph, SchemeDescriptor> turan_cycles(int n, int c);

/// Plurality scheme for c = 3. Even n = 2k: K_{k,k} plus the two side paths
/// minus the middle matching, k(k+1) edges. Odd n = 2k+1: K_{k+1,k} plus a
/// path on the larger side, k^2+2k edges.
std::pair<QueryGraph, SchemeDescriptor> c3_graph(int n);

/// Partition into c classes with w(A_1) >= ... >= w(A_c) such that
/// w(A_i) - w(v) <= w(A_c) for every i and v in A_i, computed by the
/// move-to-lightest rule from a round-robin start.
std::vector<std::vector<BallId>> balance_partition(const WeightedInstance& instance, int c);

/// Complete c-partite graph over balance_partition parts plus a spanning path
/// per part; solves the weighted plurality problem.
std::pair<QueryGraph, SchemeDescriptor> weighted_plurality_scheme(const WeightedInstance& instance,
                                                                  int c);

}  // namespace urnq

#endif
