#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logshrink {

// Log lines are opaque byte strings: real corpora contain invalid UTF-8 and
// the pipeline must stay byte-exact, so nothing in here assumes text.
using Bytes = std::string;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParamError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Structural problems in an archive: bad magic, unknown version or backend,
// truncation, inconsistent column table.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Payload decodes to something inconsistent: dictionary index out of range,
// arity mismatch, truncated varint.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// splitmix64 finalizer; derives independent RNG streams (per chunk, per
// stage) from the user seed so results do not depend on worker scheduling.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace logshrink
