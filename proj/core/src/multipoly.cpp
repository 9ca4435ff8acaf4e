#include "diagonalis/multipoly.hpp"

namespace diagonalis {

std::string to_string(const ExponentVector& n) {
  std::string out = "(";
  for (std::size_t j = 0; j < n.dim(); ++j) {
    if (j) out += ",";
    out += std::to_string(n[j]);
  }
  return out + ")";
}

}  // namespace diagonalis
