#ifndef URNQ_IO_HPP
#define URNQ_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "urnq/core.hpp"

namespace urnq::io {

// Graph file: first line "n m", then m lines "u v", 0-based, ascending
// lexicographic. Weights file: one positive integer per line. Answers file:
// one line "u v S" or "u v D" per edge. All formats are line oriented and
// trivially parseable from any language.

std::string format_graph(const QueryGraph& g);
QueryGraph parse_graph(std::istream& in);
QueryGraph parse_graph(const std::string& text);

std::string format_weights(const WeightedInstance& instance);
WeightedInstance parse_weights(std::istream& in);
WeightedInstance parse_weights(const std::string& text);

std::string format_answers(const AnswerMap& answers);
AnswerMap parse_answers(std::istream& in, const QueryGraph& g);
AnswerMap parse_answers(const std::string& text, const QueryGraph& g);

void save_file(const std::string& path, const std::string& contents);
std::string load_file(const std::string& path);

}  // namespace urnq::io

#endif
