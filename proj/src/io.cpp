#include "urnq/io.hpp"

#include <fstream>
#include <sstream>

namespace urnq::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

}  // namespace

std::string format_graph(const QueryGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.first << ' ' << e.second << '\n';
    return os.str();
}

QueryGraph parse_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) parse_fail("graph header 'n m' expected");
    if (n < 0 || m < 0) parse_fail("graph header values must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) parse_fail("graph edge line expected");
        edges.emplace_back(u, v);
    }
    return QueryGraph(n, std::move(edges));
}

QueryGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

std::string format_weights(const WeightedInstance& instance) {
    std::ostringstream os;
    for (const BigInt& w : instance.weights()) os << w << '\n';
    return os.str();
}

WeightedInstance parse_weights(std::istream& in) {
    std::vector<BigInt> weights;
    std::string tok;
    while (in >> tok) {
        for (std::size_t i = 0; i < tok.size(); ++i) {
            bool digit = tok[i] >= '0' && tok[i] <= '9';
            if (!digit) parse_fail("weights must be positive integers, got '" + tok + "'");
        }
        weights.emplace_back(tok);
    }
    if (weights.empty()) parse_fail("weights file is empty");
    return WeightedInstance(std::move(weights));
}

WeightedInstance parse_weights(const std::string& text) {
    std::istringstream is(text);
    return parse_weights(is);
}

std::string format_answers(const AnswerMap& answers) {
    std::ostringstream os;
    for (std::size_t i = 0; i < answers.edges().size(); ++i) {
        os << answers.edges()[i].first << ' ' << answers.edges()[i].second << ' '
           << (answers.answers()[i] == Answer::Same ? 'S' : 'D') << '\n';
    }
    return os.str();
}

AnswerMap parse_answers(std::istream& in, const QueryGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<Answer> answers(static_cast<std::size_t>(g.edge_count()), Answer::Same);
    int u = 0, v = 0;
    std::string verdict;
    int lines = 0;
    while (in >> u >> v >> verdict) {
        int idx = g.edge_index(u, v);
        if (idx < 0) parse_fail("answer line refers to a non-edge");
        if (seen[static_cast<std::size_t>(idx)]) parse_fail("duplicate answer line");
        seen[static_cast<std::size_t>(idx)] = 1;
        if (verdict == "S" || verdict == "SAME")
            answers[static_cast<std::size_t>(idx)] = Answer::Same;
        else if (verdict == "D" || verdict == "DIFFERENT")
            answers[static_cast<std::size_t>(idx)] = Answer::Different;
        else
            parse_fail("answer verdict must be S or D");
        ++lines;
    }
    if (lines != g.edge_count()) parse_fail("answers must cover every edge exactly once");
    return AnswerMap(g.edges(), std::move(answers));
}

AnswerMap parse_answers(const std::string& text, const QueryGraph& g) {
    std::istringstream is(text);
    return parse_answers(is, g);
}

void save_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace urnq::io
