#ifndef DFORGE_ERROR_HPP
#define DFORGE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dforge {

/// A caller handed in something outside an operation's domain
/// (zero divisor, reducible modulus, odd rank, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold did not: a residual was nonzero,
/// root factors failed to cancel, a linear system was inconsistent.
/// The CLI maps these to exit status 1.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw PreconditionError(msg);
}

}  // namespace dforge

#endif
