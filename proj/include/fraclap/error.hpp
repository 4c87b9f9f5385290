#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fraclap {

// Library error carrying a stable machine-readable tag alongside the
// human-readable message.  Tags in use: "domain_error", "pole_error",
// "branch_error", "index_error", "convergence_failure",
// "factorization_failure", "pd_violation", "degenerate_fit", "io_error".
class Error : public std::runtime_error {
 public:
  Error(std::string tag, const std::string& message)
      : std::runtime_error(tag + ": " + message), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

}  // namespace fraclap
