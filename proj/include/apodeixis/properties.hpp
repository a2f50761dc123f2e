#pragma once

// Exhaustive property suites over a bounded model space.
//
// A universal property must hold in every model; its result carries the
// least-key violation if one exists. A witness property asks for at least one
// model; its result carries the least-key witness.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apodeixis/dsl.hpp"
#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"
#include "apodeixis/search.hpp"
#include "apodeixis/semantics.hpp"

namespace apodeixis {

enum class Suite { Req, Diagram, Remarks, Contingency };

constexpr std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Req: return "req";
    case Suite::Diagram: return "diagram";
    case Suite::Remarks: return "remarks";
    case Suite::Contingency: return "contingency";
  }
  return "";
}

inline std::optional<Suite> parse_suite(std::string_view s) {
  for (Suite x : {Suite::Req, Suite::Diagram, Suite::Remarks, Suite::Contingency}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

enum class PropertyKind { Universal, Witness };

/// Evaluates one property on one model. Returns a description of the
/// violated (universal) or witnessed (witness) instance, if any, and adds the
/// number of instances examined to `checks`.
using PropertyFn =
    std::function<std::optional<std::string>(const Model&, const std::vector<Term>&, std::uint64_t& checks)>;

struct Property {
  Suite suite;
  std::string name;
  PropertyKind kind;
  PropertyFn eval;
};

namespace detail {

inline std::string stmt(Relation r, Modality m, Term s, Term p) { return to_string(Statement{r, m, s, p}); }

inline std::string at(std::string_view what, std::size_t x) {
  return std::string(what) + " at individual " + std::to_string(x);
}

/// First pair (S, P) for which `f` reports an instance.
template <class F>
std::optional<std::string> over_pairs(const std::vector<Term>& terms, F&& f) {
  for (Term s : terms) {
    for (Term p : terms) {
      if (auto r = f(s, p)) return r;
    }
  }
  return std::nullopt;
}

inline std::vector<Property> build_properties() {
  using R = Relation;
  using M = Modality;
  std::vector<Property> ps;
  auto universal = [&](Suite s, std::string name, PropertyFn f) {
    ps.push_back({s, std::move(name), PropertyKind::Universal, std::move(f)});
  };
  auto witness = [&](Suite s, std::string name, PropertyFn f) {
    ps.push_back({s, std::move(name), PropertyKind::Witness, std::move(f)});
  };
  const Term A{'A'}, B{'B'}, notA{'A', true}, notB{'B', true};

  // --- REQ
  universal(Suite::Req, "REQ1 N(SrP) implies SrP", [](const Model& m, const auto& terms, auto& n) {
    return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
      for (R r : {R::a, R::e, R::i, R::o}) {
        ++n;
        if (holds(m, {r, M::N, s, p}) && !holds(m, {r, M::X, s, p})) return stmt(r, M::N, s, p);
      }
      return std::nullopt;
    });
  });
  universal(Suite::Req, "REQ2 N(SeP) iff N(PeS); N(SiP) iff N(PiS)", [](const Model& m, const auto& terms, auto& n) {
    return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
      for (R r : {R::e, R::i}) {
        ++n;
        if (holds(m, {r, M::N, s, p}) != holds(m, {r, M::N, p, s})) return stmt(r, M::N, s, p);
      }
      return std::nullopt;
    });
  });
  universal(Suite::Req, "REQ3 NonEmpty(S) and N(SaP) imply N(SiP); NonEmpty(S) and N(SeP) imply N(SoP)",
            [](const Model& m, const auto& terms, auto& n) {
              return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
                const bool inhabited = nonempty(m, s);
                n += 2;
                if (inhabited && holds(m, {R::a, M::N, s, p}) && !holds(m, {R::i, M::N, s, p})) {
                  return stmt(R::a, M::N, s, p);
                }
                if (inhabited && holds(m, {R::e, M::N, s, p}) && !holds(m, {R::o, M::N, s, p})) {
                  return stmt(R::e, M::N, s, p);
                }
                return std::nullopt;
              });
            });

  // --- DIAG
  const std::vector<std::pair<int, int>> edges{{1, 2}, {1, 3}, {3, 4}, {2, 4}, {5, 6}, {4, 6}, {3, 5}};
  for (auto [from, to] : edges) {
    universal(Suite::Diagram, "DIAG (" + std::to_string(from) + ") implies (" + std::to_string(to) + ")",
              [from, to](const Model& m, const auto& terms, auto& n) {
                return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
                  ++n;
                  if (diagram_expr(m, {from, s, p}) && !diagram_expr(m, {to, s, p})) {
                    return "S=" + to_string(s) + ", P=" + to_string(p);
                  }
                  return std::nullopt;
                });
              });
  }
  universal(Suite::Diagram, "DIAG N(SoP) iff (2) or (3)", [](const Model& m, const auto& terms, auto& n) {
    return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
      ++n;
      const bool alt = diagram_expr(m, {2, s, p}) || diagram_expr(m, {3, s, p});
      if (holds(m, {R::o, M::N, s, p}) != alt) return stmt(R::o, M::N, s, p);
      return std::nullopt;
    });
  });
  universal(Suite::Diagram, "DIAG SoP iff (6)", [](const Model& m, const auto& terms, auto& n) {
    return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
      ++n;
      if (holds(m, {R::o, M::X, s, p}) != diagram_expr(m, {6, s, p})) return stmt(R::o, M::X, s, p);
      return std::nullopt;
    });
  });
  // No arrow may be reversed, and (2)/(3) and (4)/(5) are independent.
  std::vector<std::pair<int, int>> non_edges;
  for (auto [from, to] : edges) non_edges.emplace_back(to, from);
  for (auto pair : {std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 5}, std::pair{5, 4}}) non_edges.push_back(pair);
  for (auto [yes, no] : non_edges) {
    witness(Suite::Diagram, "DIAG (" + std::to_string(yes) + ") without (" + std::to_string(no) + ")",
            [yes, no](const Model& m, const auto& terms, auto& n) {
              return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
                ++n;
                if (diagram_expr(m, {yes, s, p}) && !diagram_expr(m, {no, s, p})) {
                  return "S=" + to_string(s) + ", P=" + to_string(p);
                }
                return std::nullopt;
              });
            });
  }
  witness(Suite::Diagram, "DIAG-NEG (5) for BoA holds but N(BoA) fails",
          [B, A](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
            ++n;
            if (diagram_expr(m, {5, B, A}) && !holds(m, {R::o, M::N, B, A})) return std::string("S=B, P=A");
            return std::nullopt;
          });

  // --- Remarks on term negation
  auto differ = [&](std::string name, Statement lhs, Statement rhs) {
    witness(Suite::Remarks, std::move(name), [lhs, rhs](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
      ++n;
      const bool l = holds(m, lhs), r = holds(m, rhs);
      if (l != r) return to_string(l ? lhs : rhs) + " holds, " + to_string(l ? rhs : lhs) + " fails";
      return std::nullopt;
    });
  };
  differ("N(BeA) and N(Ba~A) differ", {R::e, M::N, B, A}, {R::a, M::N, B, notA});
  differ("N(BoA) and N(Bi~A) differ", {R::o, M::N, B, A}, {R::i, M::N, B, notA});
  differ("N(BaA) and N(~Aa~B) differ", {R::a, M::N, B, A}, {R::a, M::N, notA, notB});
  universal(Suite::Remarks, "SaS and ~SeS hold", [](const Model& m, const auto& terms, auto& n) -> std::optional<std::string> {
    for (Term s : terms) {
      n += 2;
      if (!holds(m, {R::a, M::X, s, s})) return stmt(R::a, M::X, s, s);
      const Term c{s.base, !s.complemented};
      if (!holds(m, {R::e, M::X, c, s})) return stmt(R::e, M::X, c, s);
    }
    return std::nullopt;
  });
  witness(Suite::Remarks, "N(AaA) fails", [A](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
    ++n;
    if (!holds(m, {R::a, M::N, A, A})) return std::string("N(AaA) false");
    return std::nullopt;
  });
  witness(Suite::Remarks, "N(Ae~A) fails", [A, notA](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
    ++n;
    if (!holds(m, {R::e, M::N, A, notA})) return std::string("N(Ae~A) false");
    return std::nullopt;
  });
  witness(Suite::Remarks, "A within B at every parameter, yet N(AaB) fails",
          [A, B](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
            ++n;
            if (analytic_a(m, A, B) && !holds(m, {R::a, M::N, A, B})) return std::string("S=A, P=B");
            return std::nullopt;
          });

  // --- Contingency
  universal(Suite::Contingency, "K-EQ K(SaP) iff K(SeP); Kamp(SaP) iff Kamp(SeP); K Px iff K(~Px)",
            [](const Model& m, const auto& terms, auto& n) -> std::optional<std::string> {
              if (auto r = over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
                    n += 2;
                    if (holds(m, {R::a, M::Ktwo, s, p}) != holds(m, {R::e, M::Ktwo, s, p})) {
                      return stmt(R::a, M::Ktwo, s, p);
                    }
                    if (holds(m, {R::a, M::Kamp, s, p}) != holds(m, {R::e, M::Kamp, s, p})) {
                      return stmt(R::a, M::Kamp, s, p);
                    }
                    return std::nullopt;
                  })) {
                return r;
              }
              for (Term p : terms) {
                for (std::size_t x = 0; x < m.individuals.size(); ++x) {
                  ++n;
                  if (contingent(m, x, p) != contingent_not(m, x, p)) return at("K " + to_string(p), x);
                }
              }
              return std::nullopt;
            });

  auto each_x_term = [](const Model& m, const std::vector<Term>& terms, auto&& f) -> std::optional<std::string> {
    for (Term p : terms) {
      for (std::size_t x = 0; x < m.individuals.size(); ++x) {
        if (auto r = f(p, x)) return r;
      }
    }
    return std::nullopt;
  };
  universal(Suite::Contingency, "micro Px implies pos(1), pos(2), pos(3); ~Px implies neg(1), neg(2), neg(3)",
            [each_x_term](const Model& m, const auto& terms, auto& n) {
              return each_x_term(m, terms, [&](Term p, std::size_t x) -> std::optional<std::string> {
                const bool px = atom(m, {AtomKind::Ax, x, x, p});
                const Polarity pol = px ? Polarity::Pos : Polarity::Neg;
                for (int k = 1; k <= 3; ++k) {
                  ++n;
                  if (!micro_candidate(m, pol, k, x, p)) {
                    return at((px ? "pos(" : "neg(") + std::to_string(k) + ") of " + to_string(p), x);
                  }
                }
                return std::nullopt;
              });
            });
  universal(Suite::Contingency, "micro pos(1) and pos(2) each imply pos(3); likewise neg",
            [each_x_term](const Model& m, const auto& terms, auto& n) {
              return each_x_term(m, terms, [&](Term p, std::size_t x) -> std::optional<std::string> {
                for (Polarity pol : {Polarity::Pos, Polarity::Neg}) {
                  const bool c3 = micro_candidate(m, pol, 3, x, p);
                  for (int k = 1; k <= 2; ++k) {
                    ++n;
                    if (micro_candidate(m, pol, k, x, p) && !c3) {
                      return at(std::string(pol == Polarity::Pos ? "pos(" : "neg(") + std::to_string(k) +
                                    ") without (3) for " + to_string(p),
                                x);
                    }
                  }
                }
                return std::nullopt;
              });
            });
  auto separate = [&](std::string name, Polarity pol, int yes, int no) {
    witness(Suite::Contingency, std::move(name), [each_x_term, pol, yes, no](const Model& m, const auto& terms, auto& n) {
      return each_x_term(m, terms, [&](Term p, std::size_t x) -> std::optional<std::string> {
        ++n;
        if (micro_candidate(m, pol, yes, x, p) && !micro_candidate(m, pol, no, x, p)) return at(to_string(p), x);
        return std::nullopt;
      });
    });
  };
  separate("micro pos(1) without pos(2)", Polarity::Pos, 1, 2);
  separate("micro pos(2) without pos(1)", Polarity::Pos, 2, 1);
  separate("micro neg(1) without neg(2)", Polarity::Neg, 1, 2);
  separate("micro neg(2) without neg(1)", Polarity::Neg, 2, 1);
  universal(Suite::Contingency, "MONO SaP and pos(2) for S imply pos(2) for P",
            [](const Model& m, const auto& terms, auto& n) {
              return over_pairs(terms, [&](Term s, Term p) -> std::optional<std::string> {
                if (!holds(m, {R::a, M::X, s, p})) {
                  n += m.individuals.size();
                  return std::nullopt;
                }
                for (std::size_t x = 0; x < m.individuals.size(); ++x) {
                  ++n;
                  if (micro_candidate(m, Polarity::Pos, 2, x, s) && !micro_candidate(m, Polarity::Pos, 2, x, p)) {
                    return at("S=" + to_string(s) + ", P=" + to_string(p), x);
                  }
                }
                return std::nullopt;
              });
            });
  witness(Suite::Contingency, "MONO neg(3) not monotone: BaA and neg(3) for A, not neg(3) for B",
          [A, B](const Model& m, const auto&, auto& n) -> std::optional<std::string> {
            ++n;
            if (!holds(m, {R::a, M::X, B, A})) return std::nullopt;
            for (std::size_t x = 0; x < m.individuals.size(); ++x) {
              if (micro_candidate(m, Polarity::Neg, 3, x, A) && !micro_candidate(m, Polarity::Neg, 3, x, B)) {
                return at("BaA", x);
              }
            }
            return std::nullopt;
          });
  return ps;
}

}  // namespace detail

inline const std::vector<Property>& property_catalog() {
  static const std::vector<Property> ps = detail::build_properties();
  return ps;
}

struct PropertyResult {
  const Property* property = nullptr;
  std::uint64_t models = 0;
  std::uint64_t checks = 0;
  std::optional<std::uint64_t> first_index;  // least violation or witness
  std::optional<Model> model;
  std::string detail;

  bool ok() const { return property->kind == PropertyKind::Universal ? !first_index : first_index.has_value(); }
};

struct PropertyRun {
  EnumerationBounds bounds;
  std::vector<PropertyResult> results;

  std::uint64_t total_checks() const {
    std::uint64_t n = 0;
    for (const auto& r : results) n += r.checks;
    return n;
  }
  bool ok() const {
    for (const auto& r : results) {
      if (!r.ok()) return false;
    }
    return true;
  }
};

/// Terms ranged over by pair-quantified properties: each concept and its complement.
inline std::vector<Term> property_terms(std::string_view names) {
  std::vector<Term> out;
  for (char c : names) {
    out.push_back(Term{c, false});
    out.push_back(Term{c, true});
  }
  return out;
}

inline PropertyRun run_properties(const EnumerationBounds& bounds, std::optional<Suite> only = std::nullopt,
                                  unsigned threads = 1) {
  for (char c : {'A', 'B'}) {
    if (bounds.concept_names.find(c) == std::string::npos) {
      throw BoundsError(std::string("property suites need concept ") + c + " in the bounds");
    }
  }
  const ModelSpace space(bounds);
  std::string sorted_names = bounds.concept_names;
  std::sort(sorted_names.begin(), sorted_names.end());
  const auto terms = property_terms(sorted_names);

  std::vector<const Property*> selected;
  for (const auto& p : property_catalog()) {
    if (!only || p.suite == *only) selected.push_back(&p);
  }

  PropertyRun run;
  run.bounds = bounds;
  run.results.resize(selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) run.results[k].property = selected[k];
  std::mutex merge;

  parallel_chunks(space.size(), threads, 1024, [&](std::uint64_t begin, std::uint64_t end) {
    struct Local {
      std::uint64_t checks = 0;
      std::optional<std::uint64_t> first;
      std::string detail;
    };
    std::vector<Local> local(selected.size());
    Model m;
    for (std::uint64_t i = begin; i < end; ++i) {
      space.fill(i, m);
      for (std::size_t k = 0; k < selected.size(); ++k) {
        auto hit = selected[k]->eval(m, terms, local[k].checks);
        if (hit && !local[k].first) {
          local[k].first = i;
          local[k].detail = std::move(*hit);
        }
      }
    }
    std::lock_guard lock(merge);
    for (std::size_t k = 0; k < selected.size(); ++k) {
      auto& r = run.results[k];
      r.models += end - begin;
      r.checks += local[k].checks;
      if (local[k].first && (!r.first_index || *local[k].first < *r.first_index)) {
        r.first_index = local[k].first;
        r.detail = local[k].detail;
      }
    }
    return true;
  });

  for (auto& r : run.results) {
    if (r.first_index) r.model = decode_key(canonical_key(space.at(*r.first_index)));
  }
  return run;
}

}  // namespace apodeixis
