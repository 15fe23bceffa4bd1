#ifndef CAB_PARSE_HPP
#define CAB_PARSE_HPP

#include <string>

#include "cab/polynomial.hpp"

namespace cab {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
  std::size_t pos;
};

/// Grammar: identifiers, integer and a/b rational literals, + - * ^ and
/// parentheses.  No implicit multiplication; whitespace is insignificant.
Polynomial parse(const std::string& text, const RingPtr& ring,
                 const MonomialOrder& order = MonomialOrder::grevlex());

} // namespace cab

#endif
