#pragma once

#include <stdexcept>
#include <string>

namespace qcover {

/// Base of every domain error.  `kind()` is the typed name surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QCOVER_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

QCOVER_DEFINE_ERROR(DimensionMismatch)
QCOVER_DEFINE_ERROR(ArithmeticOverflow)
QCOVER_DEFINE_ERROR(SchemaError)
QCOVER_DEFINE_ERROR(InhomogeneousRelation)
QCOVER_DEFINE_ERROR(NotAdmissible)
QCOVER_DEFINE_ERROR(NotLocallyBounded)
QCOVER_DEFINE_ERROR(WindowTooSmall)
QCOVER_DEFINE_ERROR(NotFreeAction)
QCOVER_DEFINE_ERROR(RelationViolated)
QCOVER_DEFINE_ERROR(DecompositionInconclusive)
QCOVER_DEFINE_ERROR(IsoInconclusive)
QCOVER_DEFINE_ERROR(CapExceeded)
QCOVER_DEFINE_ERROR(ApproximationNotSurjective)
QCOVER_DEFINE_ERROR(HypothesisUnverified)
QCOVER_DEFINE_ERROR(NotSquareFree)
QCOVER_DEFINE_ERROR(AmbientNotClusterTilting)
QCOVER_DEFINE_ERROR(CarrierMismatch)

#undef QCOVER_DEFINE_ERROR

}  // namespace qcover
