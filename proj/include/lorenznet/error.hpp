#pragma once

#include <stdexcept>
#include <string>

namespace lorenznet {

enum class Errc {
  invalid_argument,
  parse,
  disconnected,
  out_of_range,
  unknown_id,
  length_mismatch,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lorenznet
