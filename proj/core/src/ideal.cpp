#include "halphen/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace halphen {

IdealSpec::IdealSpec(RingPtr ring, std::vector<Polynomial> generators,
                     std::optional<std::string> label)
    : ring_(std::move(ring)), generators_(std::move(generators)), label_(std::move(label)) {
  if (!ring_) throw std::invalid_argument("ideal without a ring");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!same_ring(g.ring_ptr(), ring_))
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is in another ring");
    if (g.is_zero()) throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero");
    if (!g.is_homogeneous())
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not homogeneous");
  }
}

bool IdealSpec::has_constant_generator() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return *g.total_degree() == 0; });
}

IdealSpec IdealSpec::with_generators(std::vector<Polynomial> generators) const {
  return IdealSpec(ring_, std::move(generators), label_);
}

}  // namespace halphen
