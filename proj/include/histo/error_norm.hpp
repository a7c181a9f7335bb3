#pragma once

#include <string>
#include <string_view>

#include "histo/operators.hpp"

namespace histo {

enum class Norm { l1, l2, linf };

Norm parse_norm(std::string_view name);
std::string to_string(Norm norm);

/// ||f - recon|| over the mesh. Each triangle is split into s^2 congruent
/// sub-triangles carrying the 7-point degree-5 rule; per-triangle partials are
/// reduced in triangle order, so the value does not depend on the thread count.
double lp_error(const ScalarField& f, const Reconstruction& recon, Norm norm, int subdivision = 4);

namespace reference {
double lp_error(const ScalarField& f, const Reconstruction& recon, Norm norm, int subdivision = 4);
}  // namespace reference

}  // namespace histo
