#pragma once

#include <stdexcept>
#include <string>

namespace delbound {

/// An instance exceeds a configured enumeration or search cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (a construction produced an invalid
/// object, or a proven property did not hold).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace delbound
