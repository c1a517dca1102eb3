#include "cdirac/errors.hpp"

namespace cdirac {

UnknownCaseError::UnknownCaseError(const std::string& name,
                                   std::string suggestion)
    : Error("unknown case '" + name + "'" +
            (suggestion.empty() ? std::string{}
                                : "; did you mean '" + suggestion + "'?")),
      suggestion_(std::move(suggestion)) {}

bool is_configuration_error(const std::exception& e) noexcept {
  return dynamic_cast<const DomainError*>(&e) != nullptr ||
         dynamic_cast<const RangeError*>(&e) != nullptr ||
         dynamic_cast<const SingularLevelError*>(&e) != nullptr ||
         dynamic_cast<const UnsupportedCaseError*>(&e) != nullptr ||
         dynamic_cast<const DivisionForbiddenError*>(&e) != nullptr ||
         dynamic_cast<const UnknownCaseError*>(&e) != nullptr ||
         dynamic_cast<const ToleranceSchemaError*>(&e) != nullptr ||
         dynamic_cast<const std::invalid_argument*>(&e) != nullptr;
}

}  // namespace cdirac
