#pragma once

#include <stdexcept>
#include <string>

namespace hyperwave {

// Argument outside the domain a routine can evaluate: poles, divergent
// series, points off the model.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative scheme stopped before reaching its accuracy target.
class ToleranceError : public std::runtime_error {
 public:
  explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

// A finite-difference stencil would leave the model domain.
class StencilError : public std::runtime_error {
 public:
  explicit StencilError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperwave
