#ifndef CAB_PROBLEM_HPP
#define CAB_PROBLEM_HPP

#include <iosfwd>
#include <string>

#include "cab/ideal.hpp"

namespace cab {

/// Text problem file:
///   vars: x y z w
///   homogeneous: true
///   blocks: primal = x y; dual = z w        (optional)
///   <one generator per line>
/// Blank lines and lines starting with # are skipped.
struct ProblemFile {
  RingPtr ring;
  Ideal ideal; // carries the homogeneous flag as its projective flag
  bool homogeneous = false;
};

ProblemFile read_problem(std::istream& in, const std::string& source_name = "<input>");
ProblemFile read_problem_file(const std::string& path);

} // namespace cab

#endif
