#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "logshrink/common.hpp"

namespace logshrink {

inline const char kDefaultDelimiters[] = "-#><_:;,[]\\/.()";

struct AnalyzerConfig {
  double sigma = 0.3;
  Bytes delimiter_universe = kDefaultDelimiters;
};

using FieldId = std::string;

// Per-field treatment decisions mined from the sampled rows. A field id
// appears in at most one of dict_fields / delta_fields; fields in patterns
// are split and their subfields (id + "_" + k) decided individually.
struct CharacteristicSet {
  std::map<FieldId, Bytes> patterns;  // P: field -> ordered delimiter bytes
  std::set<FieldId> dict_fields;      // M: dictionary-encode
  std::set<FieldId> delta_fields;     // V: delta-encode
  double sigma = 0.3;
  Bytes delimiter_universe = kDefaultDelimiters;

  bool empty() const {
    return patterns.empty() && dict_fields.empty() && delta_fields.empty();
  }
};

// distinct / total. ParamError on an empty multiset.
double multiplicity(std::span<const Bytes> values);

// Ordered delimiter skeleton shared by every value: extracts each value's
// delimiter sequence (bytes in `universe`, in order) and left-folds pairwise
// LCS across them. nullopt when the common subsequence is empty.
std::optional<Bytes> delimiter_lcs(std::span<const Bytes> values,
                                   const Bytes& universe);

// Greedy left-to-right split at the first occurrence of each pattern byte.
// Returns |pattern|+1 subfields; rejoining with the pattern reproduces the
// value exactly. nullopt when the pattern is not embeddable.
std::optional<std::vector<Bytes>> split_by_pattern(const Bytes& value,
                                                   const Bytes& pattern);

// Longest common subsequence of two byte strings (DP, deterministic
// tie-breaking). Exposed for the analyzer tests' oracles.
Bytes lcs_pair(const Bytes& a, const Bytes& b);

// A value is integer-encodable iff it is the canonical decimal rendering of
// an int64 ("007", "+5" and "-0" are not: re-rendering must be byte-exact).
bool parse_canonical_int(const Bytes& value, int64_t* out);

// Weighted entropy with w(x) = log2(|x|+1) and a natural-log entropy factor:
// sum over distinct x of w(x) * P(x) * (-ln P(x)).
double weighted_entropy(std::span<const int64_t> values);

// True when differencing lowers weighted entropy: H_w({a1, a2-a1, ...}) <
// H_w(a). Deltas are evaluated exactly (128-bit), not wrapped.
bool variability_test(std::span<const int64_t> values);

struct SampledField {
  FieldId id;
  std::vector<Bytes> values;
};

CharacteristicSet analyze(const std::vector<SampledField>& fields,
                          const AnalyzerConfig& cfg);

}  // namespace logshrink
