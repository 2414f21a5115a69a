#pragma once

#include <functional>

#include "chordiv/param_point.hpp"

namespace chordiv {

/// D(theta1 : theta2). Oriented; callers keep the argument order.
using Divergence = std::function<double(const ParamPoint&, const ParamPoint&)>;

}  // namespace chordiv
