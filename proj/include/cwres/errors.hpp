#ifndef CWRES_ERRORS_HPP
#define CWRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwres {

// Structured error: every throwing operation reports a machine-readable kind
// plus the location (element id, degree, file position) where the first
// violation was found.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string message, std::string location = "")
      : std::runtime_error(kind + ": " + message +
                           (location.empty() ? "" : " [" + location + "]")),
        kind_(std::move(kind)),
        message_(std::move(message)),
        location_(std::move(location)) {}

  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::string& location() const { return location_; }

 private:
  std::string kind_;
  std::string message_;
  std::string location_;
};

}  // namespace cwres

#endif
