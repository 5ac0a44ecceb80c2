#ifndef PERMRANK_ERRORS_HPP
#define PERMRANK_ERRORS_HPP

#include <stdexcept>

namespace permrank {

// Unparseable text or malformed binary framing.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the defined domain: out-of-range rank,
// non-member permutation, digit over its bound, size below a family minimum.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fixed (non-extendable) number system ran out of positions, or a value
// does not fit a fixed-width destination.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permrank

#endif
