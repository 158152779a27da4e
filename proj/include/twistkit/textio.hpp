#pragma once

/* Line-oriented tokenizing shared by the PD and representation file parsers.
   '#' starts a comment; tokens split on spaces, tabs, commas. 1-based line
   numbers are kept for error reporting. */

#include <string>
#include <vector>

namespace twistkit {

struct TokLine {
  int line = 0;
  std::vector<std::string> toks;
};

inline std::vector<TokLine> tokenize_lines(const std::string& text) {
  std::vector<TokLine> rows;
  std::vector<std::string> line;
  std::string cur;
  bool in_comment = false;
  int lineno = 1;
  auto flush_tok = [&] {
    if (!cur.empty()) {
      line.push_back(cur);
      cur.clear();
    }
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char ch = i < text.size() ? text[i] : '\n';
    if (ch == '\n') {
      flush_tok();
      if (!line.empty()) rows.push_back({lineno, std::move(line)});
      line.clear();
      in_comment = false;
      ++lineno;
    } else if (in_comment) {
    } else if (ch == '#') {
      flush_tok();
      in_comment = true;
    } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
      flush_tok();
    } else {
      cur += ch;
    }
  }
  return rows;
}

}  // namespace twistkit
