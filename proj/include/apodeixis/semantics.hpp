#pragma once

// Truth conditions of the categorical relations in a finite modal model.
//
// Quantifiers range over the model's individuals. For an individual x and a
// concept A:
//   Ax        x_0 in A_0
//   N(Ax)     x_t in A_t for every parameter t
//   M(Ax)     x_t in A_t for some t
//   N(x != y) x_t != y_t for every t, with M(x = y) as its negation.
// A complemented term ~A has extent W_t \ A_t at every t.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"

namespace apodeixis {

enum class Relation : char { a = 'a', e = 'e', i = 'i', o = 'o' };

enum class Modality {
  X,     // assertoric
  N,     // necessary
  Kamp,  // contingent, ampliated subject: for all x (K Sx -> K Px)
  Ktwo,  // contingent, two-sided fixation: for all x (Sx -> K Px)
  Ma2,   // for all x (Sx -> exists y (Py & M(x=y)))
  Mo2,   // for all x (Sx -> exists y (~Py & M(x=y)))
  Mo3,   // for all x (Sx -> exists y (M(~Py) & M(x=y)))
};

struct Term {
  char base = 'A';
  bool complemented = false;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Statement {
  Relation relation = Relation::a;
  Modality modality = Modality::X;
  Term subject;
  Term predicate;

  friend bool operator==(const Statement&, const Statement&) = default;
};

/// Whether the modality/relation pair has truth conditions. Contingent forms
/// exist only for the universal relations, the M-forms only for `a`.
constexpr bool supported(Modality m, Relation r) {
  switch (m) {
    case Modality::X:
    case Modality::N:
      return true;
    case Modality::Kamp:
    case Modality::Ktwo:
      return r == Relation::a || r == Relation::e;
    case Modality::Ma2:
    case Modality::Mo2:
    case Modality::Mo3:
      return r == Relation::a;
  }
  return false;
}

namespace detail {

// Shared quantifier machinery over one model. Terms are resolved to their
// extents once so evaluation does not repeat map lookups.
class Evaluator {
 public:
  struct Resolved {
    const std::vector<Extent>* extents;
    bool complemented;
  };

  explicit Evaluator(const Model& m) : m_(m) {}

  Resolved resolve(Term term) const {
    auto it = m_.concepts.find(term.base);
    if (it == m_.concepts.end()) throw EvalError(std::string("unknown concept '") + term.base + "'");
    return {&it->second, term.complemented};
  }

  std::size_t size() const { return m_.individuals.size(); }
  const Model& model() const { return m_; }

  bool member(Resolved r, std::size_t t, Element e) const {
    const auto& ext = (*r.extents)[t];
    bool in = false;
    for (auto v : ext) {
      if (v == e) {
        in = true;
        break;
      }
      if (v > e) break;
    }
    return in != r.complemented;
  }

  bool in(Resolved r, std::size_t x, std::size_t t) const { return member(r, t, m_.individuals[x][t]); }

  bool actual(Resolved r, std::size_t x) const { return in(r, x, 0); }

  bool nec(Resolved r, std::size_t x) const {
    for (std::size_t t = 0; t < m_.t_count; ++t) {
      if (!in(r, x, t)) return false;
    }
    return true;
  }

  bool poss(Resolved r, std::size_t x) const {
    for (std::size_t t = 0; t < m_.t_count; ++t) {
      if (in(r, x, t)) return true;
    }
    return false;
  }

  bool poss_not(Resolved r, std::size_t x) const { return !nec(r, x); }

  bool nec_distinct(std::size_t x, std::size_t y) const {
    const auto& a = m_.individuals[x];
    const auto& b = m_.individuals[y];
    for (std::size_t t = 0; t < m_.t_count; ++t) {
      if (a[t] == b[t]) return false;
    }
    return true;
  }

  bool poss_equal(std::size_t x, std::size_t y) const { return !nec_distinct(x, y); }

  template <class Pred>
  bool exists(Pred&& p) const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (p(x)) return true;
    }
    return false;
  }

  template <class Pred>
  bool forall(Pred&& p) const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (!p(x)) return false;
    }
    return true;
  }

  // Micro-structure candidates for contingent (non-)belonging.
  bool pos1(Resolved p, std::size_t x) const { return poss(p, x); }
  bool pos2(Resolved p, std::size_t x) const {
    return exists([&](std::size_t y) { return actual(p, y) && poss_equal(x, y); });
  }
  bool pos3(Resolved p, std::size_t x) const {
    return exists([&](std::size_t y) { return poss(p, y) && poss_equal(x, y); });
  }
  bool neg1(Resolved p, std::size_t x) const { return poss_not(p, x); }
  bool neg2(Resolved p, std::size_t x) const {
    return exists([&](std::size_t y) { return !actual(p, y) && poss_equal(x, y); });
  }
  bool neg3(Resolved p, std::size_t x) const {
    return exists([&](std::size_t y) { return poss_not(p, y) && poss_equal(x, y); });
  }

  // K Px: possibly P in sense (2) and possibly not P in sense (3).
  bool contingent(Resolved p, std::size_t x) const { return pos2(p, x) && neg3(p, x); }
  // K(~Px), fixed to coincide with K Px: the negative part first, then the positive.
  bool contingent_not(Resolved p, std::size_t x) const { return neg3(p, x) && pos2(p, x); }

  // For all y (P y -> N(x != y)).
  bool apart_from_all(Resolved p, std::size_t x) const {
    return forall([&](std::size_t y) { return !actual(p, y) || nec_distinct(x, y); });
  }
  // For all y (N P y -> N(x != y)).
  bool apart_from_necessary(Resolved p, std::size_t x) const {
    return forall([&](std::size_t y) { return !nec(p, y) || nec_distinct(x, y); });
  }

 private:
  const Model& m_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Atoms

enum class AtomKind { Ax, NotAx, NAx, MAx, MNotAx, NDistinct, MEqual };

/// An atomic formula over individuals (indices into Model::individuals).
/// `term` is ignored by NDistinct/MEqual, `y` by the others.
struct Atom {
  AtomKind kind = AtomKind::Ax;
  std::size_t x = 0;
  std::size_t y = 0;
  Term term;
};

inline bool atom(const Model& model, const Atom& a) {
  detail::Evaluator ev(model);
  const auto n = ev.size();
  if (a.x >= n || ((a.kind == AtomKind::NDistinct || a.kind == AtomKind::MEqual) && a.y >= n)) {
    throw EvalError("atom refers to an individual outside the model");
  }
  switch (a.kind) {
    case AtomKind::NDistinct:
      return ev.nec_distinct(a.x, a.y);
    case AtomKind::MEqual:
      return ev.poss_equal(a.x, a.y);
    default:
      break;
  }
  const auto p = ev.resolve(a.term);
  switch (a.kind) {
    case AtomKind::Ax:
      return ev.actual(p, a.x);
    case AtomKind::NotAx:
      return !ev.actual(p, a.x);
    case AtomKind::NAx:
      return ev.nec(p, a.x);
    case AtomKind::MAx:
      return ev.poss(p, a.x);
    case AtomKind::MNotAx:
      return ev.poss_not(p, a.x);
    default:
      break;
  }
  throw EvalError("unreachable atom kind");
}

// ---------------------------------------------------------------------------
// Statements

inline bool holds(const Model& model, const Statement& s) {
  if (!supported(s.modality, s.relation)) throw EvalError("unsupported modality/relation pair");
  detail::Evaluator ev(model);
  const auto S = ev.resolve(s.subject);
  const auto P = ev.resolve(s.predicate);
  using R = Relation;

  switch (s.modality) {
    case Modality::X:
      switch (s.relation) {
        case R::a: return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.actual(P, x); });
        case R::e: return ev.forall([&](auto x) { return !ev.actual(S, x) || !ev.actual(P, x); });
        case R::i: return ev.exists([&](auto x) { return ev.actual(S, x) && ev.actual(P, x); });
        case R::o: return ev.exists([&](auto x) { return ev.actual(S, x) && !ev.actual(P, x); });
      }
      break;

    case Modality::N:
      switch (s.relation) {
        case R::a:
          return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.nec(P, x); });
        case R::e:
          return ev.forall([&](auto x) {
            return ev.forall([&](auto y) {
              return !(ev.actual(S, x) && ev.actual(P, y)) || ev.nec_distinct(x, y);
            });
          });
        case R::i:
          return ev.exists([&](auto x) { return ev.actual(S, x) && ev.nec(P, x); }) ||
                 ev.exists([&](auto x) { return ev.nec(S, x) && ev.actual(P, x); });
        case R::o:
          return ev.exists([&](auto x) { return ev.actual(S, x) && ev.apart_from_all(P, x); }) ||
                 ev.exists([&](auto x) {
                   return ev.nec(S, x) && !ev.actual(P, x) && ev.apart_from_necessary(P, x);
                 });
      }
      break;

    case Modality::Ktwo:
      if (s.relation == R::a) {
        return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.contingent(P, x); });
      }
      return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.contingent_not(P, x); });

    case Modality::Kamp:
      if (s.relation == R::a) {
        return ev.forall([&](auto x) { return !ev.contingent(S, x) || ev.contingent(P, x); });
      }
      return ev.forall([&](auto x) { return !ev.contingent(S, x) || ev.contingent_not(P, x); });

    case Modality::Ma2:
      return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.pos2(P, x); });
    case Modality::Mo2:
      return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.neg2(P, x); });
    case Modality::Mo3:
      return ev.forall([&](auto x) { return !ev.actual(S, x) || ev.neg3(P, x); });
  }
  throw EvalError("unsupported modality/relation pair");
}

/// Non-emptiness side condition: some individual actually falls under the term.
inline bool nonempty(const Model& model, Term term) {
  detail::Evaluator ev(model);
  const auto p = ev.resolve(term);
  return ev.exists([&](auto x) { return ev.actual(p, x); });
}

// ---------------------------------------------------------------------------
// Implication diagram around N(SoP)
//
//   (1) exists x [N Sx & forall y (Py -> N(x!=y))]
//   (2) exists x [Sx   & forall y (Py -> N(x!=y))]
//   (3) exists x [N Sx & ~Px & forall y (N Py -> N(x!=y))]
//   (4) exists x [Sx   & ~Px & forall y (N Py -> N(x!=y))]
//   (5) exists x [N Sx & ~Px]
//   (6) exists x [Sx   & ~Px]
//
// N(SoP) is (2) or (3); SoP is (6).

struct DiagramExpr {
  int index = 1;
  Term subject;
  Term predicate;
};

inline bool diagram_expr(const Model& model, const DiagramExpr& d) {
  if (d.index < 1 || d.index > 6) throw EvalError("diagram expression index must be 1..6");
  detail::Evaluator ev(model);
  const auto S = ev.resolve(d.subject);
  const auto P = ev.resolve(d.predicate);
  return ev.exists([&](std::size_t x) {
    switch (d.index) {
      case 1: return ev.nec(S, x) && ev.apart_from_all(P, x);
      case 2: return ev.actual(S, x) && ev.apart_from_all(P, x);
      case 3: return ev.nec(S, x) && !ev.actual(P, x) && ev.apart_from_necessary(P, x);
      case 4: return ev.actual(S, x) && !ev.actual(P, x) && ev.apart_from_necessary(P, x);
      case 5: return ev.nec(S, x) && !ev.actual(P, x);
      default: return ev.actual(S, x) && !ev.actual(P, x);
    }
  });
}

// ---------------------------------------------------------------------------
// Contingency micro-structure

enum class Polarity { Pos, Neg };

/// Candidate (index 1..3) for possibly-P (Pos) or possibly-not-P (Neg) at individual x.
inline bool micro_candidate(const Model& model, Polarity polarity, int index, std::size_t x, Term p) {
  if (index < 1 || index > 3) throw EvalError("micro candidate index must be 1..3");
  detail::Evaluator ev(model);
  if (x >= ev.size()) throw EvalError("individual outside the model");
  const auto P = ev.resolve(p);
  if (polarity == Polarity::Pos) {
    return index == 1 ? ev.pos1(P, x) : index == 2 ? ev.pos2(P, x) : ev.pos3(P, x);
  }
  return index == 1 ? ev.neg1(P, x) : index == 2 ? ev.neg2(P, x) : ev.neg3(P, x);
}

/// K Px under the two-sided fixation.
inline bool contingent(const Model& model, std::size_t x, Term p) {
  detail::Evaluator ev(model);
  if (x >= ev.size()) throw EvalError("individual outside the model");
  return ev.contingent(ev.resolve(p), x);
}

/// K(~Px); coincides with contingent() by construction.
inline bool contingent_not(const Model& model, std::size_t x, Term p) {
  detail::Evaluator ev(model);
  if (x >= ev.size()) throw EvalError("individual outside the model");
  return ev.contingent_not(ev.resolve(p), x);
}

/// Analytic inclusion: S_t is a subset of P_t at every parameter.
inline bool analytic_a(const Model& model, Term s, Term p) {
  detail::Evaluator ev(model);
  const auto S = ev.resolve(s);
  const auto P = ev.resolve(p);
  for (std::size_t t = 0; t < model.t_count; ++t) {
    for (Element e = 0; e < model.world_sizes[t]; ++e) {
      if (ev.member(S, t, e) && !ev.member(P, t, e)) return false;
    }
  }
  return true;
}

}  // namespace apodeixis
