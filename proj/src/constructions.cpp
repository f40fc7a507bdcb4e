#include "urnq/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace urnq {

std::string family_name(SchemeFamily family) {
    switch (family) {
        case SchemeFamily::Harary: return "harary";
        case SchemeFamily::TuranCycles: return "turan-cycles";
        case SchemeFamily::C3Even: return "c3-even";
        case SchemeFamily::C3Odd: return "c3-odd";
        case SchemeFamily::WeightedPlurality: return "weighted-plurality";
    }
    return "?";
}

QueryGraph harary_graph(int n, int j) {
    if (j < 1 || j >= n) throw std::invalid_argument("harary_graph: need 1 <= j < n");
    std::vector<Edge> edges;
    int r = j / 2;
    for (int d = 1; d <= r; ++d) {
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + d) % n);
    }
    if (j % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
        } else {
            // Odd j, odd n: the standard extra diagonals; vertex 0 picks up two.
            for (int i = 0; i <= (n - 1) / 2; ++i) edges.emplace_back(i, (i + (n + 1) / 2) % n);
        }
    }
    return QueryGraph(n, std::move(edges));
}

QueryGraph kmajority_graph(int n, int k) {
    if (n <= 1 || k >= n || 2 * k <= n)
        throw std::invalid_argument("kmajority_graph: need n > k > n/2, n > 1");
    return harary_graph(n, n - k + 1);
}

namespace {

// Equipartition of [0,n) into `parts` consecutive ranges, larger parts first.
std::vector<std::vector<BallId>> consecutive_equipartition(int n, int parts) {
    std::vector<std::vector<BallId>> out(static_cast<std::size_t>(parts));
    int q = n / parts, r = n % parts;
    int next = 0;
    for (int p = 0; p < parts; ++p) {
        int size = q + (p < r ? 1 : 0);
        for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(p)].push_back(next++);
    }
    return out;
}

void add_cross_edges(std::vector<Edge>& edges, const std::vector<std::vector<BallId>>& parts) {
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (BallId u : parts[a])
                for (BallId v : parts[b]) edges.emplace_back(u, v);
        }
    }
}

void add_spanning_cycle(std::vector<Edge>& edges, const std::vector<BallId>& part) {
    const std::size_t s = part.size();
    if (s == 2) {
        edges.emplace_back(part[0], part[1]);
    } else if (s >= 3) {
        for (std::size_t i = 0; i < s; ++i) edges.emplace_back(part[i], part[(i + 1) % s]);
    }
}

void add_spanning_path(std::vector<Edge>& edges, const std::vector<BallId>& part) {
    for (std::size_t i = 0; i + 1 < part.size(); ++i) edges.emplace_back(part[i], part[i + 1]);
}

}  // namespace

std::pair<QueryGraph, SchemeDescriptor> turan_cycles(int n, int c) {
    if (c < 3) throw std::invalid_argument("turan_cycles: need c >= 3");
    if (n < c) throw std::invalid_argument("turan_cycles: need n >= c");
    auto parts = consecutive_equipartition(n, c - 1);
    std::vector<Edge> edges;
    add_cross_edges(edges, parts);
    for (const auto& part : parts) add_spanning_cycle(edges, part);
    SchemeDescriptor desc{SchemeFamily::TuranCycles, n, 0, c, parts};
    return {QueryGraph(n, std::move(edges)), std::move(desc)};
}

std::pair<QueryGraph, SchemeDescriptor> c3_graph(int n) {
    if (n < 4) throw std::invalid_argument("c3_graph: need n >= 4");
    std::vector<Edge> edges;
    SchemeDescriptor desc;
    desc.n = n;
    desc.c = 3;
    if (n % 2 == 0) {
        int k = n / 2;
        std::vector<BallId> us(static_cast<std::size_t>(k)), vs(static_cast<std::size_t>(k));
        std::iota(us.begin(), us.end(), 0);
        std::iota(vs.begin(), vs.end(), k);
        for (BallId u : us)
            for (BallId v : vs) {
                // Drop the middle matching (u_i, v_i), i = 2..k-1 in 1-based terms.
                int i = u, ji = v - k;
                if (i == ji && i >= 1 && i <= k - 2) continue;
                edges.emplace_back(u, v);
            }
        add_spanning_path(edges, us);
        add_spanning_path(edges, vs);
        desc.family = SchemeFamily::C3Even;
        desc.parts = {us, vs};
    } else {
        int k = n / 2;
        std::vector<BallId> us(static_cast<std::size_t>(k) + 1), vs(static_cast<std::size_t>(k));
        std::iota(us.begin(), us.end(), 0);
        std::iota(vs.begin(), vs.end(), k + 1);
        for (BallId u : us)
            for (BallId v : vs) edges.emplace_back(u, v);
        add_spanning_path(edges, us);
        desc.family = SchemeFamily::C3Odd;
        desc.parts = {us, vs};
    }
    return {QueryGraph(n, std::move(edges)), std::move(desc)};
}

namespace {

struct Part {
    std::vector<BallId> balls;  // sorted ascending
    BigInt weight;
};

void sort_parts(std::vector<Part>& parts) {
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.balls.front() < b.balls.front();
    });
}

}  // namespace

std::vector<std::vector<BallId>> balance_partition(const WeightedInstance& instance, int c) {
    const int n = instance.size();
    if (c < 2) throw std::invalid_argument("balance_partition: need c >= 2");
    if (c > n) throw std::invalid_argument("balance_partition: need c <= n");

    // Deterministic start: balls by descending weight, dealt round-robin.
    std::vector<BallId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](BallId a, BallId b) {
        if (instance.weight(a) != instance.weight(b)) return instance.weight(a) > instance.weight(b);
        return a < b;
    });
    std::vector<Part> parts(static_cast<std::size_t>(c));
    for (int i = 0; i < n; ++i) {
        Part& p = parts[static_cast<std::size_t>(i % c)];
        p.balls.push_back(order[static_cast<std::size_t>(i)]);
        p.weight += instance.weight(order[static_cast<std::size_t>(i)]);
    }
    for (auto& p : parts) std::sort(p.balls.begin(), p.balls.end());
    sort_parts(parts);

    // Move rule: while some (v, A_i) has w(A_i) - w(v) > w(A_c), move v to A_c.
    // The potential sum of all violations strictly decreases, so this stops.
    while (true) {
        bool moved = false;
        for (std::size_t i = 0; i < parts.size() && !moved; ++i) {
            for (std::size_t vi = 0; vi < parts[i].balls.size(); ++vi) {
                BallId v = parts[i].balls[vi];
                if (parts[i].weight - instance.weight(v) > parts.back().weight) {
                    parts[i].balls.erase(parts[i].balls.begin() + static_cast<std::ptrdiff_t>(vi));
                    parts[i].weight -= instance.weight(v);
                    parts.back().balls.insert(
                        std::lower_bound(parts.back().balls.begin(), parts.back().balls.end(), v), v);
                    parts.back().weight += instance.weight(v);
                    sort_parts(parts);
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) break;
    }

    std::vector<std::vector<BallId>> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(std::move(p.balls));
    return out;
}

std::pair<QueryGraph, SchemeDescriptor> weighted_plurality_scheme(const WeightedInstance& instance,
                                                                  int c) {
    auto parts = balance_partition(instance, c);
    std::vector<Edge> edges;
    add_cross_edges(edges, parts);
    for (const auto& part : parts) add_spanning_path(edges, part);
    SchemeDescriptor desc{SchemeFamily::WeightedPlurality, instance.size(), 0, c, parts};
    return {QueryGraph(instance.size(), std::move(edges)), std::move(desc)};
}

}  // namespace urnq
