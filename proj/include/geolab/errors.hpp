#pragma once

#include <stdexcept>
#include <string>

namespace geolab {

// Base class for every error the engine raises on bad input. Internal
// invariant violations use InternalError instead; those indicate a bug,
// not a rejected input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroDenominator : public Error { public: using Error::Error; };
class DivisionByZero  : public Error { public: using Error::Error; };
class UnknownCoordinate : public Error { public: using Error::Error; };
class PoleAtPoint     : public Error { public: using Error::Error; };
class ChartMismatch   : public Error { public: using Error::Error; };
class KindMismatch    : public Error { public: using Error::Error; };
class DegreeError     : public Error { public: using Error::Error; };
class NotComplex      : public Error { public: using Error::Error; };
class NotAlmostComplex : public Error { public: using Error::Error; };
class NotAlmostContact : public Error { public: using Error::Error; };
class BadInput        : public Error { public: using Error::Error; };
class SingularFlat    : public Error { public: using Error::Error; };
class SingularTheta   : public Error { public: using Error::Error; };
class EvenDimension   : public Error { public: using Error::Error; };

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace geolab
