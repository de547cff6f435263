#ifndef MULTIJOINT_ERRORS_H_
#define MULTIJOINT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace multijoint {

// Every error raised by the library derives from Error. The category decides
// the process exit code used by the command line tool.
class Error : public std::runtime_error {
 public:
  enum class Category { kValidation, kComputation, kIo };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const { return category_; }

 private:
  Category category_;
};

#define MULTIJOINT_DEFINE_ERROR(Name, Cat)                     \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what)                     \
        : Error(Category::Cat, std::string(#Name ": ") + what) {} \
  };

MULTIJOINT_DEFINE_ERROR(ValidationError, kValidation)
MULTIJOINT_DEFINE_ERROR(ZeroDirection, kValidation)
MULTIJOINT_DEFINE_ERROR(ZeroPolynomial, kValidation)
MULTIJOINT_DEFINE_ERROR(LineNotInZeroSet, kValidation)
MULTIJOINT_DEFINE_ERROR(SearchBudgetExceeded, kComputation)
MULTIJOINT_DEFINE_ERROR(EmptyThresholdSet, kComputation)
MULTIJOINT_DEFINE_ERROR(BisectionFailed, kComputation)
MULTIJOINT_DEFINE_ERROR(NotZeroDimensional, kComputation)
MULTIJOINT_DEFINE_ERROR(GenericityFailure, kComputation)
MULTIJOINT_DEFINE_ERROR(UndecidedSign, kComputation)
// A checked mathematical guarantee failed on computed data.
MULTIJOINT_DEFINE_ERROR(InvariantViolation, kComputation)
MULTIJOINT_DEFINE_ERROR(IoError, kIo)

#undef MULTIJOINT_DEFINE_ERROR

}  // namespace multijoint

#endif  // MULTIJOINT_ERRORS_H_
