#pragma once

#include <stdexcept>
#include <string>

namespace cprec {

// One exception class per failure category. The CLI maps these onto exit
// codes, and tests assert on the concrete type, so keep the taxonomy stable.
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct index_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct vocab_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed checkpoint or other on-disk artifact.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cprec
