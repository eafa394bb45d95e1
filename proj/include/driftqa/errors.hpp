#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace driftqa {

/// Base for all typed errors; `code()` is the stable machine-readable name.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define DRIFTQA_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

DRIFTQA_DEFINE_ERROR(UnparsableSentence);
DRIFTQA_DEFINE_ERROR(UnknownVerb);
DRIFTQA_DEFINE_ERROR(OutOfOrderFact);
DRIFTQA_DEFINE_ERROR(UnknownProbeKind);
DRIFTQA_DEFINE_ERROR(MissingSlotBinding);
DRIFTQA_DEFINE_ERROR(InsufficientBackground);
DRIFTQA_DEFINE_ERROR(SentenceExceedsBudget);
DRIFTQA_DEFINE_ERROR(UnmappedFact);
DRIFTQA_DEFINE_ERROR(BudgetTooSmall);
DRIFTQA_DEFINE_ERROR(OptionsMissing);
DRIFTQA_DEFINE_ERROR(FirstIntervalExcluded);
DRIFTQA_DEFINE_ERROR(TraceDatasetMismatch);
DRIFTQA_DEFINE_ERROR(SchemaMismatch);
DRIFTQA_DEFINE_ERROR(PredictorProtocolError);
DRIFTQA_DEFINE_ERROR(IoError);
DRIFTQA_DEFINE_ERROR(FormatError);

#undef DRIFTQA_DEFINE_ERROR

}  // namespace driftqa
