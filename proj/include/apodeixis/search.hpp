#pragma once

// Bounded countermodel search over a ModelSpace.
//
// The least countermodel is the one with the smallest ModelSpace index, which
// is also the smallest canonical key. Workers claim fixed-size chunks in
// increasing order and publish the least hit through an atomic minimum, so the
// result does not depend on the thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "apodeixis/catalog.hpp"
#include "apodeixis/dsl.hpp"
#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"
#include "apodeixis/mood.hpp"
#include "apodeixis/semantics.hpp"

namespace apodeixis {

inline constexpr std::string_view kEngineVersion = "1.0.0";

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs `body(begin, end)` over [0, n) in chunks on `threads` workers.
/// `body` returns false to stop its worker early; `stop_at` (if set) bounds
/// the chunks still handed out.
template <class Body>
void parallel_chunks(std::uint64_t n, unsigned threads, std::uint64_t chunk, Body&& body,
                     const std::atomic<std::uint64_t>* stop_at = nullptr) {
  threads = resolve_threads(threads);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= n) return;
        if (stop_at && begin > stop_at->load(std::memory_order_relaxed)) return;
        if (!body(begin, std::min(n, begin + chunk))) return;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(n);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

/// Smallest index in the space whose model satisfies `pred`.
template <class Pred>
std::optional<std::uint64_t> find_least(const ModelSpace& space, Pred pred, unsigned threads = 1) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNone};
  parallel_chunks(
      space.size(), threads, 4096,
      [&](std::uint64_t begin, std::uint64_t end) {
        Model m;
        for (std::uint64_t i = begin; i < end; ++i) {
          if (i > best.load(std::memory_order_relaxed)) return true;
          space.fill(i, m);
          if (pred(m)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return true;
          }
        }
        return true;
      },
      &best);
  const auto b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

// ---------------------------------------------------------------------------
// Inferences

inline bool premises_hold(const Model& m, const Inference& inf) {
  for (const auto& p : inf.premises) {
    if (!holds(m, p)) return false;
  }
  for (char c : inf.nonempty) {
    if (!nonempty(m, Term{c})) return false;
  }
  return true;
}

inline bool is_countermodel(const Model& m, const Inference& inf) {
  return premises_hold(m, inf) && !holds(m, inf.conclusion);
}

inline std::string required_letters(const Inference& inf) {
  std::string out;
  auto add = [&](char c) {
    if (out.find(c) == std::string::npos) out.push_back(c);
  };
  for (const auto& p : inf.premises) {
    add(p.subject.base);
    add(p.predicate.base);
  }
  for (char c : inf.nonempty) add(c);
  add(inf.conclusion.subject.base);
  add(inf.conclusion.predicate.base);
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_letters(const Inference& inf, const EnumerationBounds& bounds) {
  for (char c : required_letters(inf)) {
    if (bounds.concept_names.find(c) == std::string::npos) {
      throw BoundsError(inf.name + " uses concept " + c + ", which the bounds do not enumerate");
    }
  }
}

enum class Outcome { NoCountermodelUpToBound, CountermodelFound, FixtureConfirmed };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::NoCountermodelUpToBound: return "no_countermodel_up_to_bound";
    case Outcome::CountermodelFound: return "countermodel_found";
    case Outcome::FixtureConfirmed: return "fixture_confirmed";
  }
  return "";
}

struct CheckReport {
  std::string inference;
  std::vector<std::string> premises;
  std::vector<std::string> side_conditions;
  std::string conclusion;
  std::optional<EnumerationBounds> bounds;  // absent for fixture checks
  std::uint64_t models_checked = 0;
  Outcome outcome = Outcome::NoCountermodelUpToBound;
  std::optional<Model> countermodel;
  std::optional<std::string> fixture;
  std::chrono::nanoseconds elapsed{0};
  std::string engine_version{kEngineVersion};
};

namespace detail {

inline CheckReport report_header(const Inference& inf) {
  CheckReport r;
  r.inference = inf.name;
  for (const auto& p : inf.premises) r.premises.push_back(to_string(p));
  for (char c : inf.nonempty) r.side_conditions.push_back(std::string("NonEmpty(") + c + ")");
  r.conclusion = to_string(inf.conclusion);
  return r;
}

}  // namespace detail

/// Least countermodel within the bounds, re-checked on a freshly decoded copy.
inline std::optional<Model> find_countermodel(const Inference& inf, const EnumerationBounds& bounds,
                                              unsigned threads = 1, std::uint64_t* index_out = nullptr) {
  check_letters(inf, bounds);
  const ModelSpace space(bounds);
  const auto index = find_least(space, [&](const Model& m) { return is_countermodel(m, inf); }, threads);
  if (!index) return std::nullopt;
  if (index_out) *index_out = *index;
  Model m = decode_key(canonical_key(space.at(*index)));
  if (!is_countermodel(m, inf)) {
    throw Error("internal: countermodel for " + inf.name + " failed independent re-evaluation");
  }
  return m;
}

inline CheckReport verify_up_to(const Inference& inf, const EnumerationBounds& bounds, unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = detail::report_header(inf);
  r.bounds = bounds;
  std::uint64_t index = 0;
  r.countermodel = find_countermodel(inf, bounds, threads, &index);
  if (r.countermodel) {
    r.outcome = Outcome::CountermodelFound;
    r.models_checked = index + 1;
  } else {
    r.outcome = Outcome::NoCountermodelUpToBound;
    r.models_checked = ModelSpace(bounds).size();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Checks a catalog entry's fixture against its inference and extra claims.
/// Throws FixtureError naming the first failing fact.
inline CheckReport confirm_fixture(const CatalogEntry& entry) {
  if (!entry.fixture) throw FixtureError(entry.label() + " has no fixture");
  const auto start = std::chrono::steady_clock::now();
  const Model m = *entry_fixture_model(entry);
  if (auto v = validate(m); !v.empty()) throw FixtureError(*entry.fixture + ": " + v.front());
  const auto& inf = entry.inference;
  for (const auto& p : inf.premises) {
    if (!holds(m, p)) throw FixtureError(entry.label() + ": premise " + to_string(p) + " fails on " + *entry.fixture);
  }
  for (char c : inf.nonempty) {
    if (!nonempty(m, Term{c})) {
      throw FixtureError(entry.label() + ": NonEmpty(" + c + ") fails on " + *entry.fixture);
    }
  }
  if (holds(m, inf.conclusion)) {
    throw FixtureError(entry.label() + ": conclusion " + to_string(inf.conclusion) + " holds on " + *entry.fixture);
  }
  for (const auto& c : entry.fixture_claims) {
    if (c.predicate(m) != c.expected) {
      throw FixtureError(entry.label() + ": claim '" + c.description + "' should be " +
                         (c.expected ? "true" : "false") + " on " + *entry.fixture);
    }
  }
  if (entry.partial_conclusion && !diagram_expr(m, *entry.partial_conclusion)) {
    throw FixtureError(entry.label() + ": partial conclusion fails on " + *entry.fixture);
  }
  CheckReport r = detail::report_header(inf);
  r.outcome = Outcome::FixtureConfirmed;
  r.models_checked = 1;
  r.countermodel = m;
  r.fixture = entry.fixture;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

// ---------------------------------------------------------------------------
// Schematic check for Barbara KKK under the ampliated reading

struct SchematicReport {
  std::uint64_t assignments = 0;
  bool holds = true;
};

/// With K-predicates treated as opaque sets kS of individuals, the ampliated
/// premises say kB within kA and kC within kB; the conclusion kC within kA
/// must follow for every assignment over up to `max_individuals` individuals.
inline SchematicReport check_barbara_kkk_schematic(unsigned max_individuals = 4) {
  SchematicReport r;
  for (unsigned n = 0; n <= max_individuals; ++n) {
    const std::uint32_t subsets = 1U << n;
    for (std::uint32_t ka = 0; ka < subsets; ++ka) {
      for (std::uint32_t kb = 0; kb < subsets; ++kb) {
        for (std::uint32_t kc = 0; kc < subsets; ++kc) {
          ++r.assignments;
          const bool major = (kb & ~ka) == 0;
          const bool minor = (kc & ~kb) == 0;
          const bool conclusion = (kc & ~ka) == 0;
          if (major && minor && !conclusion) r.holds = false;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Whole-catalog runs

enum class CatalogScope { All, NNN, Mixed, Contingency };

inline bool in_scope(const CatalogEntry& e, CatalogScope scope) {
  switch (scope) {
    case CatalogScope::All: return true;
    case CatalogScope::NNN: return e.group == EntryGroup::NNN;
    case CatalogScope::Mixed: return e.group == EntryGroup::MixedNX;
    case CatalogScope::Contingency: return e.group == EntryGroup::Contingency;
  }
  return false;
}

struct CatalogRow {
  const CatalogEntry* entry = nullptr;
  CheckReport search;
  std::optional<CheckReport> fixture_check;
  std::optional<std::string> weakening;  // how the reduction route came out
  bool divergent = false;
};

struct CatalogRun {
  EnumerationBounds bounds;
  CatalogScope scope = CatalogScope::All;
  std::vector<CatalogRow> rows;
  std::vector<std::string> divergences;
  std::optional<SchematicReport> schematic;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const CatalogRow& r) { return r.entry->verdict == v; }));
  }
};

inline CatalogRun run_catalog(const EnumerationBounds& bounds, CatalogScope scope = CatalogScope::All,
                              unsigned threads = 1) {
  CatalogRun run;
  run.bounds = bounds;
  run.scope = scope;
  for (const auto& e : verdict_table()) {
    if (!in_scope(e, scope)) continue;
    CatalogRow row;
    row.entry = &e;
    row.search = verify_up_to(e.inference, bounds, threads);
    const bool found = row.search.outcome == Outcome::CountermodelFound;
    const Verdict engine = found ? Verdict::Invalid : Verdict::Valid;

    if (e.fixture) row.fixture_check = confirm_fixture(e);

    if (e.verdict == Verdict::Unasserted) {
      if (e.derived_verdict && *e.derived_verdict != engine) {
        row.divergent = true;
        run.divergences.push_back(e.label() + ": engine verdict differs from the recorded derivation");
      }
    } else if (e.verdict != engine) {
      row.divergent = true;
      run.divergences.push_back(e.label() + ": Aristotle says " + std::string(to_string(e.verdict)) +
                                ", engine search says " + std::string(to_string(engine)));
    }

    if (e.weakened_to) {
      const CatalogEntry* target = find_entry(*e.weakened_to);
      if (!target || target->verdict != Verdict::Valid) {
        throw Error("catalog: " + e.label() + " weakens to a non-valid entry");
      }
      const auto via = verify_up_to(target->inference, bounds, threads);
      const bool ok = via.outcome == Outcome::NoCountermodelUpToBound;
      row.weakening = *e.weakened_to + (ok ? ": no countermodel up to bound" : ": countermodel found");
      if (ok == found) {
        row.divergent = true;
        run.divergences.push_back(e.label() + ": weakening route and direct search disagree");
      }
    }

    if (e.group == EntryGroup::Contingency && e.mood == Mood::Barbara && e.reading == Reading::Ampliated) {
      run.schematic = check_barbara_kkk_schematic();
      if (!run.schematic->holds) {
        row.divergent = true;
        run.divergences.push_back(e.label() + ": schematic check fails");
      }
    }
    run.rows.push_back(std::move(row));
  }
  return run;
}

}  // namespace apodeixis
