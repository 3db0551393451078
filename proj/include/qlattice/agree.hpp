#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlattice/brute.hpp"

namespace qlattice {

enum class Method { brute, bounds, closed, continuum, gram, perturbation };

using MethodSet = std::set<Method>;

[[nodiscard]] std::string_view method_name(Method m);
/// Throws DomainError on an unknown name.
[[nodiscard]] Method parse_method(std::string_view name);
/// Comma-separated list; throws DomainError when empty or on an unknown name.
[[nodiscard]] MethodSet parse_methods(std::string_view list);

/// Evaluates every requested route for one configuration. The closed form is
/// always computed since it anchors the residuals. Bounds are filled only on
/// the diagonal w_x == w_p and inside their validity domains.
[[nodiscard]] AgreeResult evaluate_agree(const LatticeConfig& config, const MethodSet& methods);

/// One labelled value of an AgreeResult; bounds expand to lower_bound/upper_bound.
struct LabelledValue {
  std::string label;
  double value;
  bool is_probability;
};

/// Present values sorted by label.
[[nodiscard]] std::vector<LabelledValue> labelled_values(const AgreeResult& result,
                                                         const MethodSet& methods);

/// All divisors of d in ascending order.
[[nodiscard]] std::vector<Index> divisors(Index d);

}  // namespace qlattice
