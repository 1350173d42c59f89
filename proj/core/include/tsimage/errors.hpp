#ifndef TSIMAGE_ERRORS_HPP
#define TSIMAGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsimage {

/// Malformed or inconsistent input data (bad files, invalid series,
/// out-of-range parameters derived from data). CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during computation (non-finite objective,
/// solver breakdown). CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsimage

#endif
