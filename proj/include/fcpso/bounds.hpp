#pragma once

#include <cstddef>
#include <vector>

namespace fcpso {

/// Box constraints on the decision vector; delta_j is the velocity cap.
class BoxBounds {
public:
  BoxBounds() = default;
  BoxBounds(std::vector<double> lower, std::vector<double> upper);

  std::size_t size() const { return lower_.size(); }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }
  double delta(std::size_t j) const { return delta_[j]; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  bool contains(const std::vector<double>& x) const;

private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> delta_;
};

} // namespace fcpso
