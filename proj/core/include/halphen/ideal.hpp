#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halphen/polynomial.hpp"

namespace halphen {

/// A homogeneous ideal <f_1, ..., f_k> of Q[x_0..x_{n-1}], kept as the
/// generators exactly as given. An empty generator list is the zero ideal.
class IdealSpec {
 public:
  /// Throws std::invalid_argument if a generator is zero, inhomogeneous, or
  /// lives in another ring.
  IdealSpec(RingPtr ring, std::vector<Polynomial> generators,
            std::optional<std::string> label = std::nullopt);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t n_vars() const noexcept { return ring_->size(); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  /// True if some generator is a nonzero constant (the unit ideal).
  bool has_constant_generator() const;

  IdealSpec with_generators(std::vector<Polynomial> generators) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<std::string> label_;
};

}  // namespace halphen
