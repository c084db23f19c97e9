#pragma once

#include <stdexcept>
#include <string>

namespace monocrystal {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MONOCRYSTAL_ERROR(Name)              \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

MONOCRYSTAL_ERROR(ParseError);
MONOCRYSTAL_ERROR(MissingAssignment);
MONOCRYSTAL_ERROR(ZeroAssignment);
MONOCRYSTAL_ERROR(ColorOutOfRange);
MONOCRYSTAL_ERROR(UnsupportedSignSet);
MONOCRYSTAL_ERROR(CapExceeded);
MONOCRYSTAL_ERROR(NotTauRenderable);
MONOCRYSTAL_ERROR(InvalidDemazureSpec);
MONOCRYSTAL_ERROR(InvalidWordSpec);
MONOCRYSTAL_ERROR(IndexOutOfRange);
MONOCRYSTAL_ERROR(InvalidExtension);
MONOCRYSTAL_ERROR(NotInTorus);
MONOCRYSTAL_ERROR(RankTooSmall);
MONOCRYSTAL_ERROR(InvalidPathSpec);

#undef MONOCRYSTAL_ERROR

} // namespace monocrystal
