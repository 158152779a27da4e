#pragma once

/* PD codes and Wirtinger presentations.

   A crossing line "X a b c d" lists the four edge ends counterclockwise
   starting at the incoming under-strand: a = under in, c = under out, and
   {b, d} are the over-strand ends. Edge labels are 1-based and consecutive
   along each component in its orientation ("usual PD numbering"), so every
   label shows up exactly twice across the whole code.

   Which of b/d is the incoming over end is pinned down by demanding that
   every edge have exactly one head and one tail; the leftover freedom (a
   component that never runs under, or a curl with b == d) is settled by the
   numbering convention. The crossing is positive when the over strand runs
   b -> d. An optional leading "components <m0>" header appends crossingless
   unknot components. */

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "textio.hpp"
#include "words.hpp"

namespace twistkit {

enum class pd_error_kind { malformed_line, arc_multiplicity, inconsistent_tracing };

class pd_parse_error : public std::runtime_error {
 public:
  pd_parse_error(pd_error_kind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind(kind),
        line(line) {}
  pd_error_kind kind;
  int line;
};

struct Crossing {
  int a = 0, b = 0, c = 0, d = 0;
  int sign = 0;      // +1 over runs b->d, -1 over runs d->b
  int line = 0;      // source line, for diagnostics
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;   // labels 1..arc_count, appended circles included
  int components = 0;
  std::vector<int> component_of_arc;  // index by label, [0] unused
};

inline int component_count(const LinkDiagram& d) { return d.components; }

namespace detail {

inline int parse_label(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (...) {
    throw pd_parse_error(pd_error_kind::malformed_line, line, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size() || v < 1)
    throw pd_parse_error(pd_error_kind::malformed_line, line, "bad arc label '" + tok + "'");
  return v;
}

}  // namespace detail

inline LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram dia;
  auto rows = tokenize_lines(text);
  int m0 = 0;
  std::size_t start = 0;
  if (!rows.empty() && rows[0].toks[0] == "components") {
    if (rows[0].toks.size() != 2)
      throw pd_parse_error(pd_error_kind::malformed_line, rows[0].line,
                           "components header needs one count");
    m0 = detail::parse_label(rows[0].toks[1], rows[0].line);
    start = 1;
  }
  for (std::size_t i = start; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.toks[0] != "X")
      throw pd_parse_error(pd_error_kind::malformed_line, row.line,
                           "expected crossing line 'X a b c d'");
    if (row.toks.size() != 5)
      throw pd_parse_error(pd_error_kind::malformed_line, row.line,
                           "crossing line needs four arc labels");
    Crossing x;
    x.a = detail::parse_label(row.toks[1], row.line);
    x.b = detail::parse_label(row.toks[2], row.line);
    x.c = detail::parse_label(row.toks[3], row.line);
    x.d = detail::parse_label(row.toks[4], row.line);
    x.line = row.line;
    dia.crossings.push_back(x);
  }
  const int n = int(dia.crossings.size());
  if (n == 0 && m0 == 0)
    throw pd_parse_error(pd_error_kind::malformed_line, 1, "empty diagram");

  // every label in 1..2n, each exactly twice
  const int nedges = 2 * n;
  std::vector<int> count(std::size_t(nedges) + 1, 0);
  std::vector<int> first_line(std::size_t(nedges) + 1, 0);
  for (const auto& x : dia.crossings)
    for (int lab : {x.a, x.b, x.c, x.d}) {
      if (lab > nedges)
        throw pd_parse_error(pd_error_kind::arc_multiplicity, x.line,
                             "arc label " + std::to_string(lab) + " exceeds 2 * crossings");
      if (count[std::size_t(lab)] == 0) first_line[std::size_t(lab)] = x.line;
      if (++count[std::size_t(lab)] > 2)
        throw pd_parse_error(pd_error_kind::arc_multiplicity, x.line,
                             "arc label " + std::to_string(lab) + " used more than twice");
    }
  for (int lab = 1; lab <= nedges; ++lab)
    if (count[std::size_t(lab)] != 2)
      throw pd_parse_error(pd_error_kind::arc_multiplicity,
                           first_line[std::size_t(lab)] ? first_line[std::size_t(lab)] : 1,
                           "arc label " + std::to_string(lab) + " must appear exactly twice");

  // resolve which over end is incoming: each label needs one head, one tail
  // head[lab] / tail[lab]: -1 unknown, else crossing index claiming it
  std::vector<int> head(std::size_t(nedges) + 1, -1), tail(std::size_t(nedges) + 1, -1);
  std::vector<int> over_in(std::size_t(n), -1);  // 0: enters at b; 1: enters at d
  auto claim = [&](std::vector<int>& slot, int lab, int ci, const char* what) {
    auto& s = slot[std::size_t(lab)];
    if (s != -1)
      throw pd_parse_error(pd_error_kind::inconsistent_tracing, dia.crossings[std::size_t(ci)].line,
                           "arc " + std::to_string(lab) + " has two " + what + "s");
    s = ci;
  };
  for (int ci = 0; ci < n; ++ci) {
    claim(head, dia.crossings[std::size_t(ci)].a, ci, "head");
    claim(tail, dia.crossings[std::size_t(ci)].c, ci, "tail");
  }
  auto set_over = [&](int ci, int which) {  // 0 -> b in, d out; 1 -> d in, b out
    const Crossing& x = dia.crossings[std::size_t(ci)];
    over_in[std::size_t(ci)] = which;
    claim(head, which == 0 ? x.b : x.d, ci, "head");
    claim(tail, which == 0 ? x.d : x.b, ci, "tail");
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ci = 0; ci < n; ++ci) {
      if (over_in[std::size_t(ci)] != -1) continue;
      const Crossing& x = dia.crossings[std::size_t(ci)];
      if (x.b == x.d) continue;  // curl over itself: numbering rule below
      int hb = head[std::size_t(x.b)], hd = head[std::size_t(x.d)];
      int tb = tail[std::size_t(x.b)], td = tail[std::size_t(x.d)];
      // b can enter only while b's head slot and d's tail slot are both free;
      // claims by this same crossing's under-strand count as taken
      bool b_in_possible = hb == -1 && td == -1;
      bool d_in_possible = hd == -1 && tb == -1;
      if (!b_in_possible && !d_in_possible)
        throw pd_parse_error(pd_error_kind::inconsistent_tracing, x.line,
                             "over strand orientation contradicts arc usage");
      if (b_in_possible != d_in_possible) {
        set_over(ci, b_in_possible ? 0 : 1);
        changed = true;
      }
    }
    if (changed) continue;
    // still-ambiguous crossing: fall back to the consecutive numbering rule
    for (int ci = 0; ci < n; ++ci) {
      if (over_in[std::size_t(ci)] != -1) continue;
      const Crossing& x = dia.crossings[std::size_t(ci)];
      int which;
      if (x.b == x.d) which = 0;
      else if (x.d == x.b + 1) which = 0;
      else if (x.b == x.d + 1) which = 1;
      else which = x.b > x.d ? 0 : 1;  // wrap-around: successor jumps down
      set_over(ci, which);
      changed = true;
      break;  // re-propagate before touching the next one
    }
  }
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& x = dia.crossings[std::size_t(ci)];
    dia.crossings[std::size_t(ci)].sign = over_in[std::size_t(ci)] == 0 ? +1 : -1;
    (void)x;
  }

  // successor function along the strands
  std::vector<int> next(std::size_t(nedges) + 1, 0);
  std::vector<int> pred_count(std::size_t(nedges) + 1, 0);
  auto set_next = [&](int from, int to, int line) {
    if (next[std::size_t(from)] != 0)
      throw pd_parse_error(pd_error_kind::inconsistent_tracing, line,
                           "arc " + std::to_string(from) + " continues two ways");
    next[std::size_t(from)] = to;
    ++pred_count[std::size_t(to)];
  };
  for (const auto& x : dia.crossings) set_next(x.a, x.c, x.line);
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& x = dia.crossings[std::size_t(ci)];
    if (over_in[std::size_t(ci)] == 0) set_next(x.b, x.d, x.line);
    else set_next(x.d, x.b, x.line);
  }
  for (int lab = 1; lab <= nedges; ++lab)
    if (next[std::size_t(lab)] == 0 || pred_count[std::size_t(lab)] != 1)
      throw pd_parse_error(pd_error_kind::inconsistent_tracing, first_line[std::size_t(lab)],
                           "strand tracing breaks at arc " + std::to_string(lab));

  // components are next-cycles; the numbering convention demands each cycle
  // be a consecutive run s, s+1, ..., e wrapping back to s
  dia.component_of_arc.assign(std::size_t(nedges) + 1, -1);
  int comps = 0;
  for (int s = 1; s <= nedges; ++s) {
    if (dia.component_of_arc[std::size_t(s)] != -1) continue;
    int cur = s, expect = s;
    do {
      if (cur != expect)
        throw pd_parse_error(pd_error_kind::inconsistent_tracing, first_line[std::size_t(cur)],
                             "arc labels not consecutive along component (arc " +
                                 std::to_string(cur) + ")");
      dia.component_of_arc[std::size_t(cur)] = comps;
      cur = next[std::size_t(cur)];
      ++expect;
    } while (cur != s);
    ++comps;
  }

  dia.arc_count = nedges + m0;
  for (int i = 0; i < m0; ++i) dia.component_of_arc.push_back(comps + i);
  dia.components = comps + m0;
  return dia;
}

// One generator per over-arc (edges merged through their over-passages), one
// relator u_out * (o^eps * u_in * o^-eps)^-1 per crossing, eps the sign.
inline GroupPresentation wirtinger(const LinkDiagram& dia) {
  const int nlab = dia.arc_count;
  std::vector<int> parent(std::size_t(nlab) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x)
      x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::size_t(std::max(x, y))] = std::min(x, y);
  };
  for (const auto& x : dia.crossings) unite(x.b, x.d);

  // generator ids in increasing order of class representative (min label)
  std::vector<int> gen_of(std::size_t(nlab) + 1, -1);
  GroupPresentation pres;
  pres.components = dia.components;
  for (int lab = 1; lab <= nlab; ++lab) {
    int root = find(lab);
    if (gen_of[std::size_t(root)] == -1) {
      gen_of[std::size_t(root)] = pres.gens++;
      pres.component_of_generator.push_back(dia.component_of_arc[std::size_t(root)]);
    }
    gen_of[std::size_t(lab)] = gen_of[std::size_t(root)];
  }
  for (const auto& x : dia.crossings) {
    int out = gen_of[std::size_t(x.c)];
    int in = gen_of[std::size_t(x.a)];
    int over = gen_of[std::size_t(x.b)];
    FreeWord r;
    r.append(out, 1).append(over, x.sign).append(in, -1).append(over, -x.sign);
    pres.relators.push_back(std::move(r));
  }
  validate_presentation(pres);
  return pres;
}

}  // namespace twistkit
