#include "hamtpath/fixtures.hpp"

#include <stdexcept>

namespace hamtpath {

TimeGraph fixture_graph(const std::string& name) {
  if (name == "paper-s5") {
    return TimeGraph(5, {{0, 1, 0},
                         {1, 2, 1},
                         {1, 3, 1},
                         {2, 4, 2},
                         {3, 5, 2},
                         {4, 5, 3},
                         {5, 4, 3},
                         {5, 2, 4},
                         {4, 3, 4},
                         {2, 0, 5},
                         {3, 0, 5}});
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"paper-s5"}; }

}  // namespace hamtpath
