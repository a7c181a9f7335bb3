#include "histo/error_norm.hpp"

#include "histo/errors.hpp"

namespace histo {

Norm parse_norm(std::string_view name) {
  if (name == "l1" || name == "L1") return Norm::l1;
  if (name == "l2" || name == "L2") return Norm::l2;
  if (name == "linf" || name == "Linf" || name == "inf") return Norm::linf;
  throw ConfigError("unknown norm '" + std::string(name) + "' (expected l1, l2 or linf)");
}

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::l1:
      return "l1";
    case Norm::l2:
      return "l2";
    case Norm::linf:
      return "linf";
  }
  return "?";
}

}  // namespace histo
