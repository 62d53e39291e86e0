#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "logshrink/common.hpp"
#include "logshrink/ingest.hpp"

namespace logshrink {

struct ParserConfig {
  // Ordered header field names (loghub-style). Empty list enables
  // auto-detection from the training sample.
  std::vector<std::string> header_fields;
  double similarity_threshold = 0.7;
  double frequent_token_min_ratio = 0.5;
  std::size_t train_sample_lines = 5000;  // taken from the first chunk
  double train_subsequent_rate = 0.01;    // per-line rate for later chunks
};

struct HeaderSchema {
  std::size_t field_count = 0;
  std::vector<std::string> field_names;
  bool detected = false;  // auto-detected as opposed to configured
};

// Constant token skeleton of a log statement. Wildcard slots bind exactly one
// content token each; content tokens come from splitting on single spaces with
// empty tokens kept, so render/match are exact inverses.
struct EventTemplate {
  uint32_t event_id = 0;
  std::vector<Bytes> tokens;
  std::vector<uint8_t> wildcard;  // parallel to tokens
  std::size_t arity = 0;

  Bytes render(const std::vector<Bytes>& vars) const;
};

struct MatchResult {
  uint32_t event_id = 0;
  std::vector<Bytes> header_cells;
  std::vector<Bytes> variable_cells;
};

class ParserModel {
 public:
  ParserModel() = default;

  static ParserModel train(const std::vector<Bytes>& sample_lines,
                           const ParserConfig& cfg);

  // nullopt means unmatched; the caller keeps the raw line.
  std::optional<MatchResult> match_line(const Bytes& line) const;

  const HeaderSchema& header() const { return header_; }
  const std::vector<EventTemplate>& templates() const { return templates_; }
  double similarity_threshold() const { return similarity_threshold_; }

  Bytes serialize() const;
  static ParserModel deserialize(const Bytes& blob);

 private:
  struct TreeNode {
    std::map<Bytes, int> literal_edges;
    int wildcard_edge = -1;
    int template_id = -1;  // set on terminal nodes
  };

  void build_tree();
  int fresh_node();

  HeaderSchema header_;
  std::vector<EventTemplate> templates_;
  double similarity_threshold_ = 0.7;

  // First layer keys on content token count, the remaining layers on tokens.
  std::map<std::size_t, int> roots_;
  std::vector<TreeNode> nodes_;
};

// Columnarized parse of one chunk. Matched rows keep file order; the r-th
// element of event_ids belongs to the r-th matched line. Per event, variable
// occurrences append in matched order, so per-event cursors restore the
// original interleaving together with unmatched_index.
struct VarMatrix {
  std::size_t arity = 0;
  std::size_t occurrences = 0;
  std::vector<std::vector<Bytes>> columns;  // columns.size() == arity
};

struct ParsedChunk {
  uint64_t chunk_id = 0;
  uint32_t line_count = 0;
  std::vector<std::vector<Bytes>> header_columns;  // [field][matched row]
  std::vector<uint32_t> event_ids;                 // per matched row
  std::map<uint32_t, VarMatrix> variables;
  std::vector<uint32_t> unmatched_index;  // original line numbers, ascending
  std::vector<Bytes> unmatched_lines;
  std::vector<Terminator> terminators;  // per original line
};

ParsedChunk parse_chunk(const ParserModel& model, const LogChunk& chunk);

// Split on single spaces keeping empty tokens; join is the exact inverse.
std::vector<Bytes> split_tokens(const Bytes& s);
Bytes join_tokens(const std::vector<Bytes>& tokens);

}  // namespace logshrink
