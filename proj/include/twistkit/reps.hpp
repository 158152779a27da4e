#pragma once

/* Representations of a link group presentation over Q, and the search for
   homomorphisms to symmetric groups.

   Permutations are one-line vectors p with p[i] = image of i; composition
   compose(p,q) = p after q, matching matrix convention M[p(j)][j] = 1.

   enumerate_perm_reps does constraint-propagating backtracking: a Wirtinger
   relator with a single occurrence of its only unassigned generator forces
   that image, so for an n-crossing knot diagram only a couple of generators
   are ever branched on. Output is sorted lexicographically; truncation by
   result limit or node budget is flagged, never silent. */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat_matrix.hpp"
#include "textio.hpp"
#include "words.hpp"

namespace twistkit {

class rep_error : public std::runtime_error {
 public:
  explicit rep_error(const std::string& what) : std::runtime_error(what) {}
};

// ---- permutations ----

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[std::size_t(q[i])];
  return r;
}

inline Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[std::size_t(p[i])] = int(i);
  return r;
}

inline bool is_transposition(const Perm& p) {
  int moved = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) ++moved;
  return moved == 2;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline RatMatrix perm_to_matrix(const Perm& p) {
  RatMatrix m(int(p.size()), int(p.size()));
  for (int j = 0; j < int(p.size()); ++j) m.at(p[std::size_t(j)], j) = 1;
  return m;
}

// ---- matrix representations ----

struct MatrixRep {
  int k = 0;
  std::vector<RatMatrix> images;  // one per generator, k x k, invertible
};

inline MatrixRep trivial_rep(const GroupPresentation& p, int k) {
  MatrixRep r;
  r.k = k;
  r.images.assign(std::size_t(p.gens), RatMatrix::identity(k));
  return r;
}

inline RatMatrix evaluate_word_rational(const MatrixRep& rep, const FreeWord& w,
                                        const std::vector<RatMatrix>& inverses) {
  RatMatrix m = RatMatrix::identity(rep.k);
  for (const auto& l : w.letters)
    m = m * (l.exp > 0 ? rep.images[std::size_t(l.gen)] : inverses[std::size_t(l.gen)]);
  return m;
}

inline std::vector<RatMatrix> image_inverses(const MatrixRep& rep) {
  std::vector<RatMatrix> inv;
  inv.reserve(rep.images.size());
  for (const auto& m : rep.images) inv.push_back(m.inverse());
  return inv;
}

// relators must map to the identity; the t-twist adds t^phi(r) = t^0
inline void validate_rep(const GroupPresentation& p, const MatrixRep& rep) {
  if (int(rep.images.size()) != p.gens)
    throw rep_error("representation has wrong number of generator images");
  for (const auto& m : rep.images)
    if (m.rows() != rep.k || m.cols() != rep.k)
      throw rep_error("representation image has wrong shape");
  std::vector<RatMatrix> inv;
  try {
    inv = image_inverses(rep);
  } catch (const std::domain_error&) {
    throw rep_error("representation image is singular");
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (!evaluate_word_rational(rep, p.relators[i], inv).is_identity())
      throw rep_error("relator " + std::to_string(i) + " not satisfied by representation");
}

inline MatrixRep diagonal_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.images.size() != b.images.size())
    throw rep_error("diagonal_sum: generator counts differ");
  MatrixRep r;
  r.k = a.k + b.k;
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    RatMatrix m(r.k, r.k);
    for (int i = 0; i < a.k; ++i)
      for (int j = 0; j < a.k; ++j) m.at(i, j) = a.images[g].at(i, j);
    for (int i = 0; i < b.k; ++i)
      for (int j = 0; j < b.k; ++j) m.at(a.k + i, a.k + j) = b.images[g].at(i, j);
    r.images.push_back(std::move(m));
  }
  return r;
}

inline MatrixRep conjugate(const MatrixRep& rep, const RatMatrix& g) {
  if (g.rows() != rep.k || g.cols() != rep.k) throw rep_error("conjugate: shape mismatch");
  RatMatrix ginv = g.inverse();
  MatrixRep r;
  r.k = rep.k;
  for (const auto& m : rep.images) r.images.push_back(g * m * ginv);
  return r;
}

// ---- permutation representation search ----

struct PermAssignment {
  int n = 0;
  std::vector<Perm> images;

  MatrixRep to_matrix_rep() const {
    MatrixRep r;
    r.k = n;
    for (const auto& p : images) r.images.push_back(perm_to_matrix(p));
    return r;
  }

  friend bool operator==(const PermAssignment&, const PermAssignment&) = default;
};

struct EnumOptions {
  bool transpositions_only = false;
  bool surjective_only = false;
  long limit = -1;                   // max results, -1 = unbounded
  long node_budget = 1000000;       // branch attempts before giving up
  bool distinct_up_to_conjugacy = false;
};

struct EnumResult {
  std::vector<PermAssignment> reps;
  bool truncated = false;
};

namespace detail {

inline Perm eval_span_perm(const std::vector<Perm>& img, int n, const FreeWord& w, std::size_t lo,
                           std::size_t hi) {
  Perm m = identity_perm(n);
  for (std::size_t i = lo; i < hi; ++i) {
    const Letter& l = w.letters[i];
    m = l.exp > 0 ? compose(m, img[std::size_t(l.gen)])
                  : compose(m, inverse_perm(img[std::size_t(l.gen)]));
  }
  return m;
}

inline bool subgroup_is_full(const std::vector<Perm>& gens, int n) {
  long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::set<Perm> seen;
  std::vector<Perm> frontier{identity_perm(n)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      Perm nx = compose(cur, g);
      if (seen.insert(nx).second) {
        if (long(seen.size()) == order) return true;
        frontier.push_back(std::move(nx));
      }
    }
  }
  return long(seen.size()) == order;
}

}  // namespace detail

inline EnumResult enumerate_perm_reps(const GroupPresentation& pres, int n,
                                      const EnumOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("enumerate_perm_reps: degree must be >= 1");

  // static plan: interleave forced solves, checks and branch points
  struct Step {
    enum { Branch, Solve, Check } kind;
    int gen = -1;        // Branch/Solve target
    int relator = -1;    // Solve/Check relator
    std::size_t pos = 0; // Solve: letter position of the forced generator
  };
  std::vector<Step> steps;
  std::vector<bool> assigned(std::size_t(pres.gens), false);
  std::vector<bool> consumed(pres.relators.size(), false);
  int nassigned = 0;
  auto relators_done = [&] {
    for (bool c : consumed)
      if (!c) return false;
    return true;
  };
  while (nassigned < pres.gens || !relators_done()) {
    bool progress = false;
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
      if (consumed[ri]) continue;
      const FreeWord& w = pres.relators[ri];
      int unknown = -1, occurrences = 0;
      std::size_t pos = 0;
      bool multiple_unknowns = false;
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int g = w.letters[i].gen;
        if (assigned[std::size_t(g)]) continue;
        if (unknown == -1 || unknown == g) {
          unknown = g;
          ++occurrences;
          pos = i;
        } else {
          multiple_unknowns = true;
        }
      }
      if (multiple_unknowns) continue;
      if (unknown == -1) {
        steps.push_back({Step::Check, -1, int(ri), 0});
        consumed[ri] = true;
        progress = true;
      } else if (occurrences == 1) {
        steps.push_back({Step::Solve, unknown, int(ri), pos});
        assigned[std::size_t(unknown)] = true;
        ++nassigned;
        consumed[ri] = true;
        progress = true;
      }
    }
    if (progress) continue;
    // no forced move: branch on the generator appearing most often in pending relators
    // (every pending relator has >= 1 unassigned generator here, so one exists
    // unless only free generators remain)
    int best = -1, best_count = -1;
    std::vector<int> count(std::size_t(pres.gens), 0);
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
      if (consumed[ri]) continue;
      for (const auto& l : pres.relators[ri].letters)
        if (!assigned[std::size_t(l.gen)]) ++count[std::size_t(l.gen)];
    }
    for (int g = 0; g < pres.gens; ++g)
      if (!assigned[std::size_t(g)] && count[std::size_t(g)] > best_count) {
        best = g;
        best_count = count[std::size_t(g)];
      }
    steps.push_back({Step::Branch, best, -1, 0});
    assigned[std::size_t(best)] = true;
    ++nassigned;
  }

  std::vector<Perm> candidates;
  for (const auto& p : all_perms(n))
    if (!opt.transpositions_only || is_transposition(p)) candidates.push_back(p);

  EnumResult result;
  std::vector<Perm> img(std::size_t(pres.gens));
  long nodes = 0;
  bool abort = false;

  std::function<void(std::size_t)> go = [&](std::size_t si) {
    if (abort) return;
    if (si == steps.size()) {
      if (opt.surjective_only && !detail::subgroup_is_full(img, n)) return;
      if (opt.limit >= 0 && long(result.reps.size()) >= opt.limit) {
        result.truncated = true;
        abort = true;
        return;
      }
      result.reps.push_back({n, img});
      return;
    }
    const Step& st = steps[si];
    switch (st.kind) {
      case Step::Check: {
        const FreeWord& w = pres.relators[std::size_t(st.relator)];
        if (detail::eval_span_perm(img, n, w, 0, w.letters.size()) == identity_perm(n))
          go(si + 1);
        return;
      }
      case Step::Solve: {
        const FreeWord& w = pres.relators[std::size_t(st.relator)];
        Perm u = detail::eval_span_perm(img, n, w, 0, st.pos);
        Perm v = detail::eval_span_perm(img, n, w, st.pos + 1, w.letters.size());
        Perm val = w.letters[st.pos].exp > 0 ? compose(inverse_perm(u), inverse_perm(v))
                                             : compose(v, u);
        if (opt.transpositions_only && !is_transposition(val)) return;
        img[std::size_t(st.gen)] = std::move(val);
        go(si + 1);
        return;
      }
      case Step::Branch: {
        for (const auto& cand : candidates) {
          if (++nodes > opt.node_budget) {
            result.truncated = true;
            abort = true;
            return;
          }
          img[std::size_t(st.gen)] = cand;
          go(si + 1);
          if (abort) return;
        }
        return;
      }
    }
  };
  go(0);

  if (opt.distinct_up_to_conjugacy) {
    std::vector<PermAssignment> kept;
    const auto conjugators = all_perms(n);
    for (const auto& rep : result.reps) {
      bool minimal = true;
      for (const auto& s : conjugators) {
        Perm sinv = inverse_perm(s);
        std::vector<Perm> conj;
        conj.reserve(rep.images.size());
        for (const auto& p : rep.images) conj.push_back(compose(s, compose(p, sinv)));
        if (conj < rep.images) {
          minimal = false;
          break;
        }
      }
      if (minimal) kept.push_back(rep);
    }
    result.reps = std::move(kept);
  }

  std::sort(result.reps.begin(), result.reps.end(),
            [](const PermAssignment& a, const PermAssignment& b) { return a.images < b.images; });
  return result;
}

// ---- representation files ----

// format: "k <k>" then one line per generator, k*k rationals row-major
inline MatrixRep parse_rep_file(const std::string& text, int gens) {
  auto rows = tokenize_lines(text);
  if (rows.empty() || rows[0].toks.size() != 2 || rows[0].toks[0] != "k")
    throw rep_error("representation file must start with 'k <dimension>'");
  int k = 0;
  try {
    k = std::stoi(rows[0].toks[1]);
  } catch (...) {
    throw rep_error("bad dimension in representation file");
  }
  if (k < 1) throw rep_error("bad dimension in representation file");
  if (int(rows.size()) - 1 != gens)
    throw rep_error("representation file has " + std::to_string(rows.size() - 1) +
                    " generator lines, presentation needs " + std::to_string(gens));
  MatrixRep rep;
  rep.k = k;
  for (int g = 0; g < gens; ++g) {
    const auto& toks = rows[std::size_t(g) + 1].toks;
    if (int(toks.size()) != k * k)
      throw rep_error("generator line " + std::to_string(g + 1) + " needs " +
                      std::to_string(k * k) + " entries");
    RatMatrix m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        try {
          m.at(i, j) = rat_from_string(toks[std::size_t(i * k + j)]);
        } catch (const std::invalid_argument& e) {
          throw rep_error(e.what());
        }
      }
    rep.images.push_back(std::move(m));
  }
  return rep;
}

// ---- labeled families ----

struct LabeledRep {
  std::string id;
  MatrixRep rep;
};

inline std::string perm_assignment_id(const PermAssignment& a) {
  std::string s = "perm n=" + std::to_string(a.n) + " <";
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    if (g) s += ",";
    for (int v : a.images[g]) s += char('0' + v);
  }
  return s + ">";
}

// trivial rep followed by all permutation reps of degree 1..max_degree
inline std::pair<std::vector<LabeledRep>, bool> family_trivial_and_perms(
    const GroupPresentation& p, int max_degree, long node_budget = 1000000) {
  std::vector<LabeledRep> fam;
  fam.push_back({"trivial k=1", trivial_rep(p, 1)});
  bool truncated = false;
  for (int n = 1; n <= max_degree; ++n) {
    EnumOptions opt;
    opt.node_budget = node_budget;
    EnumResult res = enumerate_perm_reps(p, n, opt);
    truncated = truncated || res.truncated;
    for (const auto& a : res.reps) fam.push_back({perm_assignment_id(a), a.to_matrix_rep()});
  }
  return {fam, truncated};
}

}  // namespace twistkit
