#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "logshrink/common.hpp"

namespace logshrink {

enum class Terminator : uint8_t { None = 0, Lf = 1, CrLf = 2 };

const Bytes& terminator_bytes(Terminator t);

// A fixed-size batch of raw lines, the unit of parallel processing.
// Concatenating lines[i] + terminators[i] over all chunks in chunk_id order
// reproduces the source file byte-for-byte.
struct LogChunk {
  uint64_t chunk_id = 0;
  uint64_t byte_offset = 0;  // offset of the chunk's first byte in the source
  std::vector<Bytes> lines;
  std::vector<Terminator> terminators;
};

// Streams a byte source into chunks of chunk_size_lines lines each (the last
// chunk may be short). Lines are split at LF; a directly preceding CR is
// folded into the terminator. A final line without a terminator is kept with
// Terminator::None. Lone CR bytes stay inside the line.
class ChunkReader {
 public:
  ChunkReader(std::istream& in, std::size_t chunk_size_lines);

  // Chunks come back in file order; nullopt at end of input.
  std::optional<LogChunk> next();

 private:
  bool refill();

  std::istream* in_;
  std::size_t chunk_size_lines_;
  uint64_t next_chunk_id_ = 0;
  uint64_t consumed_ = 0;  // bytes handed out so far
  Bytes buf_;
  std::size_t pos_ = 0;
  bool eof_ = false;
};

std::vector<LogChunk> chunk_stream(std::istream& in, std::size_t chunk_size_lines);

// Inverse of chunking; the last step of decompression and the round-trip
// oracle in tests.
Bytes chunk_to_bytes(const LogChunk& chunk);

}  // namespace logshrink
