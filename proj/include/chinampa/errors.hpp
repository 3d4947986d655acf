#pragma once

#include <stdexcept>
#include <string>

namespace chinampa {

enum class ErrorKind {
  invalid_size,
  invalid_tree,
  domain,
  unsupported_topology,
  precondition,
  invalid_attachment,
  redundancy,
  exactness,
  shape,
  bijection_domain,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chinampa
