#ifndef SRK_ERROR_HPP_
#define SRK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace srk {

// All library errors carry a stable machine-readable kind, e.g. "NotPrime",
// "ReducibleModulus", "TooLarge". Kinds ending in "TooLarge" map to the
// budget-exceeded exit code at the C API boundary; everything else is a
// validation error.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace srk

#endif  // SRK_ERROR_HPP_
