#pragma once

#include <stdexcept>
#include <string>

namespace opgroup {

enum class Errc {
  slot_range,
  not_partition,
  not_guillotine,
  size_mismatch,
  domain_mismatch,
  codomain_mismatch,
  not_fillings,
  base_mismatch,
  length,
  not_multiball,
  not_in_stabilizer,
  unknown,
  not_split,
  not_bijection,
  flavor,
  parse,
};

/// Stable identifier such as "E_SLOT_RANGE".
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace opgroup
