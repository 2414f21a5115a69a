#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordiv/divergence.hpp"
#include "chordiv/generators.hpp"

namespace chordiv {

struct DivergenceParams {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> epsilon;
};

/// A divergence identifier plus its scalar knobs. Identifiers:
///   bregman, bregman_dual, bregman_chord, bregman_tangent, bregman_chord_approx,
///   jensen, jensen_skewed, jensen_chord, jensen_bregman,
///   fdiv:<f>, fdiv_dual:<f>, fdiv_jsym:<f>, fdiv_jssym:<f>, kl, ekl,
///   biskew:<any of the above>
struct DivergenceSpec {
  std::string id;
  DivergenceParams params;
};

/// Binds a spec to a generator. Parameters are validated here, so a bad
/// alpha fails before any point is evaluated. Unknown ids raise
/// kUnknownDivergence; missing parameters raise kInvalidParameter.
Divergence resolve_divergence(const DivergenceSpec& spec, const Generator& f);

/// Whether the identifier names a divergence, independent of its parameters.
bool is_known_divergence(std::string_view id);

/// Ids that need no generator gradient.
bool divergence_is_gradient_free(std::string_view id);

std::vector<std::string> known_divergence_ids();

}  // namespace chordiv
