#include "qlattice/agree.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "qlattice/analytic.hpp"
#include "qlattice/errors.hpp"

namespace qlattice {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kNames = {{
    {Method::brute, "brute"},
    {Method::bounds, "bounds"},
    {Method::closed, "closed"},
    {Method::continuum, "continuum"},
    {Method::gram, "gram"},
    {Method::perturbation, "perturbation"},
}};

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kNames) {
    if (method == m) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, label] : kNames) {
    if (label == name) return method;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

MethodSet parse_methods(std::string_view list) {
  MethodSet out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view token = list.substr(start, comma - start);
    if (!token.empty()) out.insert(parse_method(token));
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("at least one method is required");
  return out;
}

AgreeResult evaluate_agree(const LatticeConfig& config, const MethodSet& methods) {
  const Index d = config.d();
  AgreeResult r(config);
  r.closed = closed_form(d, config.w_x(), config.w_p());
  if (methods.contains(Method::brute)) r.brute = p_agree_average_brute(config);
  if (methods.contains(Method::gram)) r.gram = p_agree_average_gram(config);
  if (methods.contains(Method::continuum)) {
    r.continuum = continuum_form(static_cast<double>(config.w_x()) / static_cast<double>(d),
                                 config.w_p());
  }
  if (methods.contains(Method::perturbation)) {
    r.perturbation = perturbation_exact(d, config.w_x(), config.w_p());
  }
  if (methods.contains(Method::bounds) && config.w_x() == config.w_p()) {
    const BoundPair b = bounds(d, config.w_x());
    r.upper_bound = b.upper;
    r.lower_bound = b.lower;
  }
  return r;
}

std::vector<LabelledValue> labelled_values(const AgreeResult& result, const MethodSet& methods) {
  std::vector<LabelledValue> out;
  if (result.brute) out.push_back({"brute", *result.brute, true});
  if (methods.contains(Method::closed)) out.push_back({"closed", result.closed, true});
  if (result.continuum) out.push_back({"continuum", *result.continuum, true});
  if (result.gram) out.push_back({"gram", *result.gram, true});
  if (result.lower_bound) out.push_back({"lower_bound", *result.lower_bound, false});
  if (result.perturbation) out.push_back({"perturbation", *result.perturbation, false});
  if (result.upper_bound) out.push_back({"upper_bound", *result.upper_bound, false});
  std::sort(out.begin(), out.end(),
            [](const LabelledValue& a, const LabelledValue& b) { return a.label < b.label; });
  return out;
}

std::vector<Index> divisors(Index d) {
  if (d < 1) throw DomainError("d must be >= 1");
  std::vector<Index> small;
  std::vector<Index> large;
  for (Index i = 1; i * i <= d; ++i) {
    if (d % i != 0) continue;
    small.push_back(i);
    if (i != d / i) large.push_back(d / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace qlattice
