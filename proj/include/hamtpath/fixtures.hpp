#pragma once

#include <string>
#include <vector>

#include "hamtpath/timegraph.hpp"

namespace hamtpath {

// Built-in demonstration graphs addressable by name from the CLI.
//
// "paper-s5": the 11-edge order-5 graph on which removal order matters: a
// single scan that tests e(0,1,0) first strands it, while restarting scans
// empty the graph. It carries no Hamiltonian time path; its two maximal
// time paths each revisit a city.
TimeGraph fixture_graph(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace hamtpath
