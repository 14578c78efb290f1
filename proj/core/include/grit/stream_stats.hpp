#pragma once

#include <cstddef>
#include <cstdint>

namespace grit {

/// Counters maintained by the chunked input readers.
struct StreamStats {
  std::uint64_t bytes_read = 0;
  std::uint64_t lines_read = 0;
  /// Largest number of input lines that had bytes resident in the read
  /// buffer at the same time.
  std::uint64_t peak_buffered_lines = 0;
  std::size_t buffer_capacity = 0;
};

}  // namespace grit
