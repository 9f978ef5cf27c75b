#pragma once

#include <stdexcept>
#include <string>

namespace zisv {

// Bad inputs: config keys, file formats, invalid distribution parameters.
// Surfaces as exit code 2 at the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure inside a sampler: non-finite filter state, SPD violation,
// determinant collapse. Surfaces as exit code 1 at the CLI.
class SamplerError : public std::runtime_error {
 public:
  explicit SamplerError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zisv
