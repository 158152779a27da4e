#pragma once

/* Twisted chain complex of a presentation and the invariants read off it.

   For a presentation P = <x_1..x_g | r_1..r_r> of a link group, a
   representation alpha: pi_1 -> GL(k,Q), and the epimorphism phi sending
   every meridian to t, write Phi(w) = alpha(w) t^phi(w). The complex

       Lambda^{kr} --d2--> Lambda^{kg} --d1--> Lambda^k

   has d1 block column j equal to (Phi(x_j) - id)^T and d2 block (j,i) equal
   to Phi(dr_i/dx_j)^T. These are the classical row-convention Alexander
   matrices recast as column maps by entry transposition; d1 * d2 = 0 is
   exactly the fundamental identity of free calculus because alpha(r_i) = id.
   For k = 1 the transposes are invisible.

   H0 = coker d1 and H1 = ker d1 / im d2 are the twisted Alexander modules.
   Delta_i is the order of H_i, Delta~ the order of the torsion part, rk the
   free rank, tau = Delta_1 / Delta_0 as a reduced fraction. Orders live in
   Q[t,1/t] up to units c*t^n; reported representatives are unit-normalized.

   The audits package the detection statements: each "for all alpha" theorem
   is checked over a supplied finite representation family and reported as a
   family-scoped verdict with an explicit witness on failure, never as an
   unconditional claim. */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fox.hpp"
#include "parallel.hpp"
#include "poly_matrix.hpp"
#include "reps.hpp"
#include "smith.hpp"
#include "words.hpp"

namespace twistkit {

struct TwistedComplex {
  int k = 1;
  PolyMatrix d1;  // k x k*g
  PolyMatrix d2;  // k*g x k*(relators kept)
};

// drop_index picks the relator omitted when drop_one_relator is set; -1 means
// the last one. Dropping is safe for Wirtinger presentations (any single
// crossing relator is a consequence of the others) and is the classical
// deficiency-one setup.
inline TwistedComplex build_complex(const GroupPresentation& p, const MatrixRep& rep,
                                    bool drop_one_relator = false, int drop_index = -1) {
  validate_rep(p, rep);
  GroupPresentation q = p;
  if (drop_one_relator && !q.relators.empty()) {
    int di = drop_index < 0 ? int(q.relators.size()) - 1 : drop_index;
    if (di >= int(q.relators.size()))
      throw std::invalid_argument("build_complex: drop index out of range");
    q.relators.erase(q.relators.begin() + di);
  }
  const int k = rep.k;
  auto inv = image_inverses(rep);
  TwistedComplex c;
  c.k = k;
  c.d1 = PolyMatrix(k, k * p.gens);
  for (int j = 0; j < p.gens; ++j) {
    FreeWord xj;
    xj.append(j, 1);
    PolyMatrix b = evaluate_word(xj, rep, inv);  // alpha(x_j) t^phi(x_j)
    for (int r = 0; r < k; ++r)
      for (int cc = 0; cc < k; ++cc) {
        LaurentPoly e = b.at(cc, r);  // transposed block
        if (r == cc) e -= LaurentPoly::one();
        c.d1.at(r, j * k + cc) = std::move(e);
      }
  }
  c.d2 = evaluate_fox_matrix(q, rep, inv).transpose();
  return c;
}

// order of coker d1; the twist forces this module to be torsion, so a rank
// drop in d1 can only mean broken input and is surfaced as logic_error
inline LaurentPoly h0_order(const TwistedComplex& c) {
  SmithForm f = smith_normal_form(c.d1, false);
  if (f.rank < c.k)
    throw std::logic_error("h0_order: cokernel of d1 has positive rank");
  LaurentPoly p = LaurentPoly::one();
  for (const auto& d : f.diagonal()) p = p * d;
  return p.normalize_unit();
}

// ker d1 / im d2, as (free rank, elementary divisors)
inline ModuleInvariants h1_module(const TwistedComplex& c) {
  PolyMatrix kb = kernel_basis(c.d1);
  PolyMatrix m = express_in_basis(kb, c.d2);
  return module_invariants(m, kb.cols());
}

struct TauValue {
  LaurentPoly num, den;  // reduced fraction, both unit-normalized
  bool integral = false;
};

struct InvariantReport {
  int k = 1;
  std::string rep_id;
  LaurentPoly delta0;          // order of H0, never zero
  LaurentPoly delta1;          // order of H1, zero iff rank > 0
  LaurentPoly torsion_delta;   // order of the torsion part of H1
  int rank = 0;                // free rank of H1
  std::optional<TauValue> tau;               // absent when delta1 = 0
  int deg0 = 0;                              // breadth of delta0
  std::optional<int> deg1;                   // absent when delta1 = 0
  std::optional<Rational> norm_lower_bound;  // (deg1 - deg0) / k, absent when delta1 = 0
  // per-report consistency checks
  bool h0_torsion = false;           // delta0 != 0
  bool h0_degree_bound = false;      // breadth(delta0) <= k
  bool delta1_matches_rank = false;  // delta1 == 0 iff rank > 0
};

inline InvariantReport report(const GroupPresentation& p, const MatrixRep& rep,
                              const std::string& rep_id = "", bool drop_one_relator = true) {
  TwistedComplex c = build_complex(p, rep, drop_one_relator);
  InvariantReport r;
  r.k = rep.k;
  r.rep_id = rep_id;
  r.delta0 = h0_order(c);
  ModuleInvariants h1 = h1_module(c);
  r.rank = h1.rank;
  r.torsion_delta = LaurentPoly::one();
  for (const auto& d : h1.divisors) r.torsion_delta = r.torsion_delta * d;
  r.torsion_delta = r.torsion_delta.normalize_unit();
  r.delta1 = r.rank > 0 ? LaurentPoly() : r.torsion_delta;
  r.deg0 = r.delta0.breadth();
  if (!r.delta1.is_zero()) {
    r.deg1 = r.delta1.breadth();
    r.norm_lower_bound = Rational(*r.deg1 - r.deg0) / r.k;
    TauValue tau;
    LaurentPoly g = gcd(r.delta1, r.delta0);
    tau.num = div_exact(r.delta1, g).normalize_unit();
    tau.den = div_exact(r.delta0, g).normalize_unit();
    tau.integral = tau.den.is_one();
    r.tau = std::move(tau);
  }
  r.h0_torsion = !r.delta0.is_zero();
  r.h0_degree_bound = r.deg0 <= r.k;
  r.delta1_matches_rank = r.delta1.is_zero() == (r.rank > 0);
  return r;
}

// reports for a whole family, computed in parallel, order preserved
inline std::vector<InvariantReport> family_reports(const GroupPresentation& p,
                                                   const std::vector<LabeledRep>& family,
                                                   bool drop_one_relator = true) {
  return parallel_map(family, [&](const LabeledRep& lr) {
    return report(p, lr.rep, lr.id, drop_one_relator);
  });
}

// best certified Thurston-norm lower bound over the reports; reports with
// delta1 = 0 certify nothing
inline Rational thurston_lower_bound(const std::vector<InvariantReport>& reports) {
  std::optional<Rational> best;
  for (const auto& r : reports)
    if (r.norm_lower_bound && (!best || *r.norm_lower_bound > *best)) best = r.norm_lower_bound;
  if (!best) throw std::domain_error("thurston_lower_bound: every delta1 vanishes");
  return *best;
}

/* Detection audits. Scope strings say what was actually checked. */

struct AuditVerdict {
  bool pass = false;
  std::string scope;    // e.g. "necessary-conditions-checked-over-family"
  std::string witness;  // failing representation and value, empty on pass
  int family_size = 0;
};

namespace detail {

inline std::string poly_witness(const InvariantReport& r, const char* field,
                                const LaurentPoly& value) {
  return r.rep_id + ": " + field + " = " + value.render();
}

}  // namespace detail

// necessary conditions for "K is the trefoil or the figure-8 knot": the
// untwisted polynomial matches one of the two genus-1 fibered values, and
// every family representation keeps delta1 nonzero with breadth <= 2k
inline AuditVerdict certify_genus1_fibered(const GroupPresentation& p,
                                           const std::vector<LabeledRep>& family) {
  if (p.components != 1)
    throw std::invalid_argument("certify_genus1_fibered: diagram is not a knot");
  AuditVerdict v;
  v.scope = "necessary-conditions-checked-over-family";
  v.family_size = int(family.size());
  InvariantReport base = report(p, trivial_rep(p, 1), "trivial k=1");
  const LaurentPoly trefoil = poly_from({1, -1, 1});
  const LaurentPoly fig8 = poly_from({1, -3, 1});
  if (!(base.delta1 == trefoil || base.delta1 == fig8)) {
    v.witness = "classical polynomial mismatch: delta1 = " + base.delta1.render();
    return v;
  }
  for (const auto& r : family_reports(p, family)) {
    if (r.delta1.is_zero()) {
      v.witness = detail::poly_witness(r, "delta1", r.delta1);
      return v;
    }
    if (*r.deg1 > 2 * r.k) {
      v.witness = r.rep_id + ": breadth " + std::to_string(*r.deg1) + " exceeds 2k = " +
                  std::to_string(2 * r.k);
      return v;
    }
  }
  v.pass = true;
  return v;
}

struct SplitVerdict {
  bool pass = false;     // rk >= s*k held for every family representation
  bool attained = false; // some representation attained rk == s*k exactly
  std::string scope;
  std::string witness;      // violating representation, empty when pass
  std::string attained_by;  // first representation attaining equality
  int family_size = 0;
};

// necessary condition for s-splittability: rk(L, alpha) >= s*k for all alpha
inline SplitVerdict split_rank_audit(const GroupPresentation& p,
                                     const std::vector<LabeledRep>& family, int s) {
  if (p.components < 2)
    throw std::invalid_argument("split_rank_audit: need at least two components");
  if (s < 1) throw std::invalid_argument("split_rank_audit: s must be positive");
  SplitVerdict v;
  v.scope = "necessary-condition-checked-over-family";
  v.family_size = int(family.size());
  v.pass = true;
  for (const auto& r : family_reports(p, family)) {
    if (r.rank < s * r.k && v.witness.empty()) {
      v.pass = false;
      v.witness = r.rep_id + ": rank " + std::to_string(r.rank) + " < s*k = " +
                  std::to_string(s * r.k);
    }
    if (r.rank == s * r.k && v.attained_by.empty()) {
      v.attained = true;
      v.attained_by = r.rep_id;
    }
  }
  return v;
}

// necessary conditions for the m-component trivial link: rk = k(m-1) and
// torsion order 1 for every family representation
inline AuditVerdict trivial_link_audit(const GroupPresentation& p,
                                       const std::vector<LabeledRep>& family) {
  if (p.components < 1) throw std::invalid_argument("trivial_link_audit: empty link");
  AuditVerdict v;
  v.scope = "necessary-conditions-checked-over-family";
  v.family_size = int(family.size());
  for (const auto& r : family_reports(p, family)) {
    int want = r.k * (p.components - 1);
    if (r.rank != want) {
      v.witness = r.rep_id + ": rank " + std::to_string(r.rank) + " != k(m-1) = " +
                  std::to_string(want);
      return v;
    }
    if (!r.torsion_delta.is_one()) {
      v.witness = detail::poly_witness(r, "torsion_delta", r.torsion_delta);
      return v;
    }
  }
  v.pass = true;
  return v;
}

// necessary condition for the unknot: delta1 = 1 for every family representation
inline AuditVerdict unknot_audit(const GroupPresentation& p,
                                 const std::vector<LabeledRep>& family) {
  if (p.components != 1)
    throw std::invalid_argument("unknot_audit: diagram is not a knot");
  AuditVerdict v;
  v.scope = "necessary-condition-checked-over-family";
  v.family_size = int(family.size());
  for (const auto& r : family_reports(p, family)) {
    if (!r.delta1.is_one()) {
      v.witness = detail::poly_witness(r, "delta1", r.delta1);
      return v;
    }
  }
  v.pass = true;
  return v;
}

// necessary condition for the Hopf link: tau is a unit (tau = 1 up to units)
// for every family representation
inline AuditVerdict hopf_audit(const GroupPresentation& p,
                               const std::vector<LabeledRep>& family) {
  if (p.components != 2)
    throw std::invalid_argument("hopf_audit: diagram is not a two-component link");
  AuditVerdict v;
  v.scope = "necessary-condition-checked-over-family";
  v.family_size = int(family.size());
  for (const auto& r : family_reports(p, family)) {
    bool tau_is_one = r.tau && r.tau->num.is_one() && r.tau->den.is_one();
    if (!tau_is_one) {
      if (r.delta1.is_zero())
        v.witness = detail::poly_witness(r, "delta1", r.delta1);
      else
        v.witness = r.rep_id + ": tau = (" + r.tau->num.render() + ") / (" +
                    r.tau->den.render() + ")";
      return v;
    }
  }
  v.pass = true;
  return v;
}

inline constexpr const char* kNoVanishingWitness = "no vanishing witness found within budget";

struct VanishingSearch {
  bool found = false;
  std::string witness_id;  // representation with delta1 = 0, when found
  std::string message;     // kNoVanishingWitness when not found
  int family_size = 0;
};

// looks for a representation killing delta1; absence over a finite family
// proves nothing and is reported in exactly those terms
inline VanishingSearch vanishing_witness_search(const GroupPresentation& p,
                                                const std::vector<LabeledRep>& family) {
  VanishingSearch s;
  s.family_size = int(family.size());
  for (const auto& r : family_reports(p, family)) {
    if (r.delta1.is_zero()) {
      s.found = true;
      s.witness_id = r.rep_id;
      s.message = "delta1 vanishes at " + r.rep_id;
      return s;
    }
  }
  s.message = kNoVanishingWitness;
  return s;
}

}  // namespace twistkit
