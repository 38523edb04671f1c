#include "jordan/trace.hpp"

#include <sstream>

#include "jordan/error.hpp"

namespace jordan {

void BoundTriple::validate() const {
  if (bd < ExtNat(1)) throw Error("Bd bound below 1 in " + str());
  if (bd.is_finite() && BoundValue::from(bd) < j) throw Error("J bound exceeds Bd bound in " + str());
}

std::string BoundTriple::str() const { return "(J <= " + j.str() + ", Rk_f <= " + rkf.str() + ", Bd <= " + bd.str() + ")"; }

std::string TraceStep::param(std::string const& key) const {
  for (auto const& [k, v] : params)
    if (k == key) return v;
  throw Error("trace step " + rule + " has no parameter " + key);
}

BoundTriple const& DerivationTrace::result() const {
  if (steps_.empty()) throw Error("empty derivation trace");
  return steps_.back().output;
}

std::size_t DerivationTrace::append(TraceStep step) {
  for (auto i : step.inputs)
    if (i >= steps_.size()) throw Error("trace step " + step.rule + " refers to a later step");
  steps_.push_back(std::move(step));
  return steps_.size() - 1;
}

std::size_t DerivationTrace::splice(DerivationTrace const& other) {
  auto offset = steps_.size();
  for (auto step : other.steps_) {
    for (auto& i : step.inputs) i += offset;
    steps_.push_back(std::move(step));
  }
  return steps_.size() - 1;
}

std::string DerivationTrace::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    auto const& s = steps_[i];
    out << "[" << i << "] " << s.rule;
    if (!s.params.empty()) {
      out << " {";
      for (std::size_t k = 0; k < s.params.size(); ++k) out << (k ? ", " : "") << s.params[k].first << "=" << s.params[k].second;
      out << "}";
    }
    if (!s.inputs.empty()) {
      out << " from";
      for (auto in : s.inputs) out << " [" << in << "]";
    }
    out << "\n    " << s.statement << "\n    => " << s.output.str() << "\n";
    if (!s.note.empty()) out << "    note: " << s.note << "\n";
  }
  return out.str();
}

}  // namespace jordan
