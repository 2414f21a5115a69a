#include "chordiv/divergence_registry.hpp"

#include "chordiv/bregman.hpp"
#include "chordiv/error.hpp"
#include "chordiv/f_divergence.hpp"
#include "chordiv/jensen.hpp"

namespace chordiv {

namespace {

constexpr std::string_view kBiskewPrefix = "biskew:";

double need(const std::optional<double>& v, std::string_view flag, std::string_view id) {
  if (!v) {
    raise(ErrorCode::kInvalidParameter,
          "divergence '" + std::string(id) + "' needs --" + std::string(flag));
  }
  return *v;
}

DiscreteDist as_dist(const ParamPoint& p) { return DiscreteDist(p.vec()); }

std::optional<std::string_view> strip(std::string_view id, std::string_view prefix) {
  if (id.substr(0, prefix.size()) == prefix) return id.substr(prefix.size());
  return std::nullopt;
}

FGenerator f_named(std::string_view name, std::string_view id) {
  for (auto known : f_generator_names()) {
    if (known == name) return make_f_generator(name);
  }
  raise(ErrorCode::kUnknownDivergence, "unknown f-generator in '" + std::string(id) + "'");
}

Divergence resolve_f_family(std::string_view id) {
  if (id == "kl") {
    const auto f = make_f_generator("kl");
    return [f](const ParamPoint& a, const ParamPoint& b) { return f_div(f, as_dist(a), as_dist(b)); };
  }
  if (id == "ekl") {
    return [](const ParamPoint& a, const ParamPoint& b) {
      return extended_kl(as_dist(a), as_dist(b));
    };
  }
  if (auto name = strip(id, "fdiv:")) {
    const auto f = f_named(*name, id);
    return [f](const ParamPoint& a, const ParamPoint& b) { return f_div(f, as_dist(a), as_dist(b)); };
  }
  if (auto name = strip(id, "fdiv_dual:")) {
    const auto f = dual_generator(f_named(*name, id));
    return [f](const ParamPoint& a, const ParamPoint& b) { return f_div(f, as_dist(a), as_dist(b)); };
  }
  if (auto name = strip(id, "fdiv_jsym:")) {
    const auto f = j_symmetrize(f_named(*name, id));
    return [f](const ParamPoint& a, const ParamPoint& b) { return f_div(f, as_dist(a), as_dist(b)); };
  }
  if (auto name = strip(id, "fdiv_jssym:")) {
    const auto f = f_named(*name, id);
    return [f](const ParamPoint& a, const ParamPoint& b) {
      return js_symmetrize_div(f, as_dist(a), as_dist(b));
    };
  }
  return nullptr;
}

}  // namespace

Divergence resolve_divergence(const DivergenceSpec& spec, const Generator& f) {
  const std::string_view id = spec.id;
  const auto& p = spec.params;

  if (auto inner_id = strip(id, kBiskewPrefix)) {
    if (inner_id->empty() || strip(*inner_id, kBiskewPrefix)) {
      raise(ErrorCode::kUnknownDivergence, "biskew needs a single inner divergence");
    }
    const auto inner = resolve_divergence({std::string(*inner_id), p}, f);
    const auto range = f.domain().unbounded() ? SkewRange::kUnbounded : SkewRange::kUnitInterval;
    const SkewPair sp(need(p.gamma, "gamma", id), need(p.delta, "delta", id), range);
    return [inner, sp](const ParamPoint& a, const ParamPoint& b) { return biskew(inner, a, b, sp); };
  }

  if (id == "bregman") {
    return [f](const ParamPoint& a, const ParamPoint& b) { return bregman(f, a, b); };
  }
  if (id == "bregman_dual") {
    return [f](const ParamPoint& a, const ParamPoint& b) { return bregman_dual(f, a, b); };
  }
  if (id == "bregman_chord") {
    const ChordParams cp(need(p.alpha, "alpha", id), need(p.beta, "beta", id));
    return [f, cp](const ParamPoint& a, const ParamPoint& b) { return bregman_chord(f, a, b, cp); };
  }
  if (id == "bregman_tangent") {
    const double alpha = need(p.alpha, "alpha", id);
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      raise(ErrorCode::kInvalidParameter, "tangent alpha must lie in (0, 1]");
    }
    return [f, alpha](const ParamPoint& a, const ParamPoint& b) {
      return bregman_tangent(f, a, b, alpha);
    };
  }
  if (id == "bregman_chord_approx") {
    const double eps = need(p.epsilon, "epsilon", id);
    if (!(eps > 0.0 && eps < 1.0)) raise(ErrorCode::kInvalidParameter, "epsilon must lie in (0, 1)");
    return [f, eps](const ParamPoint& a, const ParamPoint& b) {
      return bregman_chord_approx(f, a, b, eps);
    };
  }
  if (id == "jensen") {
    return [f](const ParamPoint& a, const ParamPoint& b) { return jensen(f, a, b); };
  }
  if (id == "jensen_skewed" || id == "jensen_bregman") {
    const double alpha = need(p.alpha, "alpha", id);
    if (!(alpha > 0.0 && alpha < 1.0)) raise(ErrorCode::kInvalidParameter, "alpha must lie in (0, 1)");
    if (id == "jensen_skewed") {
      return [f, alpha](const ParamPoint& a, const ParamPoint& b) {
        return jensen_skewed(f, a, b, alpha);
      };
    }
    return [f, alpha](const ParamPoint& a, const ParamPoint& b) {
      return jensen_bregman(f, a, b, alpha);
    };
  }
  if (id == "jensen_chord") {
    const JensenChordParams jcp(need(p.alpha, "alpha", id), need(p.beta, "beta", id),
                                need(p.gamma, "gamma", id));
    return [f, jcp](const ParamPoint& a, const ParamPoint& b) { return jensen_chord(f, a, b, jcp); };
  }
  if (auto d = resolve_f_family(id)) return d;

  raise(ErrorCode::kUnknownDivergence, "unknown divergence '" + std::string(id) + "'");
}

bool is_known_divergence(std::string_view id) {
  if (auto inner = strip(id, kBiskewPrefix)) {
    return !strip(*inner, kBiskewPrefix) && is_known_divergence(*inner);
  }
  static constexpr std::string_view kPlain[] = {
      "bregman", "bregman_dual", "bregman_chord", "bregman_tangent", "bregman_chord_approx",
      "jensen",  "jensen_skewed", "jensen_chord", "jensen_bregman",  "kl", "ekl"};
  for (auto known : kPlain) {
    if (id == known) return true;
  }
  for (auto fam : {"fdiv:", "fdiv_dual:", "fdiv_jsym:", "fdiv_jssym:"}) {
    if (auto name = strip(id, fam)) {
      for (auto known : f_generator_names()) {
        if (known == *name) return true;
      }
    }
  }
  return false;
}

bool divergence_is_gradient_free(std::string_view id) {
  if (auto inner = strip(id, kBiskewPrefix)) return divergence_is_gradient_free(*inner);
  return !(id == "bregman" || id == "bregman_dual" || id == "bregman_tangent" ||
           id == "jensen_bregman");
}

std::vector<std::string> known_divergence_ids() {
  std::vector<std::string> ids = {
      "bregman",       "bregman_dual",   "bregman_chord", "bregman_tangent",
      "bregman_chord_approx", "jensen",  "jensen_skewed", "jensen_chord",
      "jensen_bregman", "kl",            "ekl"};
  for (auto fam : {"fdiv:", "fdiv_dual:", "fdiv_jsym:", "fdiv_jssym:"}) {
    for (auto name : f_generator_names()) ids.push_back(std::string(fam) + std::string(name));
  }
  ids.push_back("biskew:<id>");
  return ids;
}

}  // namespace chordiv
