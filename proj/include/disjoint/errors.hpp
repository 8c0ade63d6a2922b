#pragma once

#include <stdexcept>
#include <string>

namespace disjoint {

/// A query reached past the range on which a finite set is known to be complete.
class UncertifiedRegion : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A mixed-radix spec is too short for the requested value; call extend_spec first.
class ExtendSpecError : public UncertifiedRegion {
 public:
  using UncertifiedRegion::UncertifiedRegion;
};

/// fit_moduli could not place a target inside any admissible window.
class InfeasibleTarget : public std::runtime_error {
 public:
  InfeasibleTarget(std::size_t index, std::string target, const std::string& why)
      : std::runtime_error("infeasible target #" + std::to_string(index) + " (" + target + "): " + why),
        index_(index),
        target_(std::move(target)) {}

  std::size_t index() const noexcept { return index_; }
  const std::string& target() const noexcept { return target_; }

 private:
  std::size_t index_;
  std::string target_;
};

}  // namespace disjoint
