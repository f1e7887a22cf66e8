#include "opgroup/error.hpp"

namespace opgroup {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::slot_range: return "E_SLOT_RANGE";
    case Errc::not_partition: return "E_NOT_PARTITION";
    case Errc::not_guillotine: return "E_NOT_GUILLOTINE";
    case Errc::size_mismatch: return "E_SIZE_MISMATCH";
    case Errc::domain_mismatch: return "E_DOMAIN_MISMATCH";
    case Errc::codomain_mismatch: return "E_CODOMAIN_MISMATCH";
    case Errc::not_fillings: return "E_NOT_FILLINGS";
    case Errc::base_mismatch: return "E_BASE_MISMATCH";
    case Errc::length: return "E_LENGTH";
    case Errc::not_multiball: return "E_NOT_MULTIBALL";
    case Errc::not_in_stabilizer: return "E_NOT_IN_STABILIZER";
    case Errc::unknown: return "E_UNKNOWN";
    case Errc::not_split: return "E_NOT_SPLIT";
    case Errc::not_bijection: return "E_NOT_BIJECTION";
    case Errc::flavor: return "E_FLAVOR";
    case Errc::parse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace opgroup
