#pragma once

#include <stdexcept>
#include <string>

namespace lrp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define LRP_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
  public:                                 \
    using Error::Error;                   \
  }

LRP_DEFINE_ERROR(ImageTooSmall);
LRP_DEFINE_ERROR(MethodMismatch);
LRP_DEFINE_ERROR(LengthMismatch);
LRP_DEFINE_ERROR(HeterogeneousEntries);
LRP_DEFINE_ERROR(EmptyIndex);
LRP_DEFINE_ERROR(IncompatibleQuery);
LRP_DEFINE_ERROR(TooFewEntries);
LRP_DEFINE_ERROR(EmptyResults);
LRP_DEFINE_ERROR(MissingScanSize);
LRP_DEFINE_ERROR(LayoutMismatch);
LRP_DEFINE_ERROR(FileNotFound);
LRP_DEFINE_ERROR(DecodeError);
LRP_DEFINE_ERROR(TooSmallAfterResize);
LRP_DEFINE_ERROR(FormatError);

#undef LRP_DEFINE_ERROR

} // namespace lrp
