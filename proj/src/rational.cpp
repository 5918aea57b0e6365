#include "hamtpath/rational.hpp"

#include <stdexcept>

namespace hamtpath {

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace hamtpath
