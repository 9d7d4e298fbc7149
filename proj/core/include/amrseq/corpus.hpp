#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "amrseq/graph.hpp"

namespace amr {

// One corpus record: comment metadata plus the Penman block.
// File format: records separated by blank lines; `# ::id`, `# ::snt` and
// `# ::tok` comment lines precede the graph. UTF-8 throughout.
struct CorpusRecord {
  std::string id;
  std::string sentence;
  std::vector<std::string> tokens;  // from ::tok, else whitespace-split ::snt
  AmrGraph graph;
};

std::vector<CorpusRecord> read_corpus(std::istream& in,
                                      const std::string& name = "<stream>");
std::vector<CorpusRecord> read_corpus_file(const std::string& path);

void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& recs);
void write_corpus_file(const std::string& path,
                       const std::vector<CorpusRecord>& recs);

// Line-oriented helpers shared by sidecar files (one line per sentence).
std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);

std::vector<std::string> split_ws(const std::string& line);
std::string join_ws(const std::vector<std::string>& toks);

// Sidecar tag line "token/TAG token/TAG ..." -> tags only. The token part is
// not trusted; only position matters.
std::vector<std::string> parse_tagged_line(const std::string& line);
std::string render_tagged_line(const std::vector<std::string>& tokens,
                               const std::vector<std::string>& tags);

}  // namespace amr
