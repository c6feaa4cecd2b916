#ifndef GSEMI_CORPUS_HPP
#define GSEMI_CORPUS_HPP

#include <string>
#include <vector>

#include "gsemi/graph.hpp"

namespace gsemi {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

// Standard test corpus: every labeled graph on 1..4 vertices plus the
// named landmark graphs (K5, C5, K_{2,2}, K_{3,3}, Turan and minimizer
// instances on 5-6 vertices).
std::vector<NamedGraph> corpus();

}  // namespace gsemi

#endif
