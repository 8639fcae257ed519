#include "lorenznet/lorenz.hpp"

namespace lorenznet {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::less: return "less";
    case Relation::greater: return "greater";
    case Relation::incomparable: return "incomparable";
  }
  return "unknown";
}

}  // namespace lorenznet
