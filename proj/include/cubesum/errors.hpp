#pragma once
// Exception types shared by every module. Each carries a stable name so the
// CLI can map failures to exit codes and the JSON report.

#include <stdexcept>
#include <string>

namespace cubesum {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CUBESUM_ERROR(Name)                                                    \
    struct Name : Error {                                                      \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}           \
    }

// eisenstein
CUBESUM_ERROR(NotSplit);
CUBESUM_ERROR(NoPrimaryAssociate);
CUBESUM_ERROR(NotPrime);
CUBESUM_ERROR(BadModulus);
CUBESUM_ERROR(TrivialCharacter);
CUBESUM_ERROR(BadNormalization);
CUBESUM_ERROR(DividesSixD);
CUBESUM_ERROR(FieldTooLarge);
// heckeform
CUBESUM_ERROR(BadPrimeClass);
CUBESUM_ERROR(RamifiedIdeal);
CUBESUM_ERROR(MismatchAt);
// analytic
CUBESUM_ERROR(TermsCapExceeded);
CUBESUM_ERROR(PoleAtLatticePoint);
CUBESUM_ERROR(TorsionCheckFailed);
// qseries / parametrize
CUBESUM_ERROR(RecognitionFailed);
CUBESUM_ERROR(CubeRootNotInField);
CUBESUM_ERROR(DescentFailed);
// curves
CUBESUM_ERROR(MixedCurves);
CUBESUM_ERROR(UnhandledResidue);
CUBESUM_ERROR(KernelPoint);
CUBESUM_ERROR(DegenerateImage);
CUBESUM_ERROR(BadReduction);
// cli-level outcomes
CUBESUM_ERROR(BadInput);
CUBESUM_ERROR(PrecisionExhausted);
CUBESUM_ERROR(InternalCheckFailed);

#undef CUBESUM_ERROR

}  // namespace cubesum
