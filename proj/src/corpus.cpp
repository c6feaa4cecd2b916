#include "gsemi/corpus.hpp"

#include "gsemi/moments.hpp"

namespace gsemi {

std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 4; ++n) {
    int nbits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << nbits); ++mask)
      out.push_back({"n" + std::to_string(n) + "_m" + std::to_string(mask),
                     graph_from_edge_mask(n, mask)});
  }
  out.push_back({"K5", complete_graph(5)});
  out.push_back({"C5", cycle_graph(5)});
  out.push_back({"K22", turan_graph(4, 2)});
  out.push_back({"K33", turan_graph(6, 2)});
  out.push_back({"turan_6_2", turan_graph(6, 2)});
  out.push_back({"turan_6_3", turan_graph(6, 3)});
  out.push_back({"minimizer_5_2", minimizer_graph(5, 2)});
  out.push_back({"minimizer_6_3", minimizer_graph(6, 3)});
  return out;
}

}  // namespace gsemi
