#include "imc/gamble.hpp"

#include <cmath>
#include <string>

#include "imc/error.hpp"
#include "imc/kernels.hpp"

namespace imc {

Gamble::Gamble(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidGamble("gamble must have at least one entry");
  require_finite();
}

Gamble Gamble::constant(std::size_t n, double c) { return Gamble(std::vector<double>(n, c)); }

double Gamble::min() const { return kernels::min_max(values_).min; }
double Gamble::max() const { return kernels::min_max(values_).max; }

Gamble Gamble::operator-() const {
  Gamble r = *this;
  for (double& v : r.values_) v = -v;
  return r;
}

Gamble& Gamble::operator+=(const Gamble& o) {
  require_same_size(o);
  kernels::active().add(values_.data(), o.values_.data(), values_.data(), values_.size());
  require_finite();
  return *this;
}

Gamble& Gamble::operator-=(const Gamble& o) {
  require_same_size(o);
  kernels::active().sub(values_.data(), o.values_.data(), values_.data(), values_.size());
  require_finite();
  return *this;
}

Gamble& Gamble::operator+=(double c) {
  for (double& v : values_) v += c;
  require_finite();
  return *this;
}

Gamble& Gamble::operator*=(double c) {
  kernels::active().scale(c, values_.data(), values_.data(), values_.size());
  require_finite();
  return *this;
}

Gamble Gamble::pointwise(const Gamble& o) const {
  require_same_size(o);
  Gamble r = *this;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= o.values_[i];
  r.require_finite();
  return r;
}

void Gamble::require_same_size(const Gamble& o) const {
  if (o.size() != size()) {
    throw DimensionMismatch("gamble sizes differ: " + std::to_string(size()) + " vs " +
                            std::to_string(o.size()));
  }
}

void Gamble::require_finite() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidGamble("gamble entry " + std::to_string(i) + " is not finite");
    }
  }
}

double hilbert_seminorm(const Gamble& h) {
  const auto mm = kernels::min_max(h.values());
  return mm.max - mm.min;
}

double sup_norm(const Gamble& h) { return kernels::max_abs(h.values()); }

Gamble indicator(std::size_t n, std::span<const StateIndex> states) {
  std::vector<double> v(n, 0.0);
  for (StateIndex x : states) {
    if (x >= n) throw UnknownState("state index " + std::to_string(x) + " out of range");
    v[x] = 1.0;
  }
  return Gamble(std::move(v));
}

Gamble indicator(const StateSpace& space, std::span<const std::string> labels) {
  std::vector<StateIndex> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(space.index_of(l));
  return indicator(space.size(), idx);
}

Gamble indicator(const StateSpace& space, std::initializer_list<std::string_view> labels) {
  std::vector<StateIndex> idx;
  for (auto l : labels) idx.push_back(space.index_of(l));
  return indicator(space.size(), idx);
}

Gamble unit(std::size_t n, StateIndex x) {
  const StateIndex one[] = {x};
  return indicator(n, one);
}

}  // namespace imc
