// exec.hpp
// Execution policy for the grid kernels.  Every kernel has a plain serial
// reference path and an OpenMP path that partitions work by grid row (or by
// independent item).  Partial results are combined in a fixed order, so both
// policies produce bitwise-identical values.

#ifndef LAWSON_EXEC_HPP
#define LAWSON_EXEC_HPP

namespace lawson {

enum class Exec { serial, parallel };

}  // namespace lawson

#endif
