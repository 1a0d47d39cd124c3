#pragma once

#include <stdexcept>

namespace hnc {

// Thrown when a computed quantity fails its own certificate (non-stabilized
// index, non-quantized Chern sum, reconstruction mismatch, ...). Bad inputs
// raise std::invalid_argument instead.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hnc
