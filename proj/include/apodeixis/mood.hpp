#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apodeixis/semantics.hpp"

namespace apodeixis {

enum class Mood {
  Barbara, Celarent, Darii, Ferio,        // first figure
  Cesare, Camestres, Festino, Baroco,     // second figure
  Darapti, Felapton, Datisi, Disamis,     // third figure
  Ferison, Bocardo,
};

inline constexpr std::array<Mood, 14> kAllMoods{
    Mood::Barbara, Mood::Celarent, Mood::Darii,    Mood::Ferio,    Mood::Cesare,
    Mood::Camestres, Mood::Festino, Mood::Baroco,  Mood::Darapti,  Mood::Felapton,
    Mood::Datisi,  Mood::Disamis,  Mood::Ferison,  Mood::Bocardo,
};

constexpr std::string_view mood_name(Mood m) {
  constexpr std::array<std::string_view, 14> names{
      "Barbara", "Celarent", "Darii",    "Ferio",   "Cesare",  "Camestres", "Festino",
      "Baroco",  "Darapti",  "Felapton", "Datisi",  "Disamis", "Ferison",   "Bocardo"};
  return names[static_cast<std::size_t>(m)];
}

constexpr int figure(Mood m) {
  const auto i = static_cast<int>(m);
  return i < 4 ? 1 : i < 8 ? 2 : 3;
}

/// A categorical form without modality: relation between two letters.
struct Schema {
  Relation relation;
  char subject;
  char predicate;
};

struct MoodSchema {
  Schema major;
  Schema minor;
  Schema conclusion;
  bool needs_nonempty_c = false;  // Darapti, Felapton
};

/// Premise and conclusion layout per mood. First figure: B?A, C?B |- C?A.
/// Second figure: B?A, C?A |- C?B. Third figure: C?A, C?B |- B?A.
constexpr MoodSchema mood_schema(Mood m) {
  using R = Relation;
  switch (m) {
    case Mood::Barbara:   return {{R::a, 'B', 'A'}, {R::a, 'C', 'B'}, {R::a, 'C', 'A'}};
    case Mood::Celarent:  return {{R::e, 'B', 'A'}, {R::a, 'C', 'B'}, {R::e, 'C', 'A'}};
    case Mood::Darii:     return {{R::a, 'B', 'A'}, {R::i, 'C', 'B'}, {R::i, 'C', 'A'}};
    case Mood::Ferio:     return {{R::e, 'B', 'A'}, {R::i, 'C', 'B'}, {R::o, 'C', 'A'}};
    case Mood::Cesare:    return {{R::e, 'B', 'A'}, {R::a, 'C', 'A'}, {R::e, 'C', 'B'}};
    case Mood::Camestres: return {{R::a, 'B', 'A'}, {R::e, 'C', 'A'}, {R::e, 'C', 'B'}};
    case Mood::Festino:   return {{R::e, 'B', 'A'}, {R::i, 'C', 'A'}, {R::o, 'C', 'B'}};
    case Mood::Baroco:    return {{R::a, 'B', 'A'}, {R::o, 'C', 'A'}, {R::o, 'C', 'B'}};
    case Mood::Darapti:   return {{R::a, 'C', 'A'}, {R::a, 'C', 'B'}, {R::i, 'B', 'A'}, true};
    case Mood::Felapton:  return {{R::e, 'C', 'A'}, {R::a, 'C', 'B'}, {R::o, 'B', 'A'}, true};
    case Mood::Datisi:    return {{R::a, 'C', 'A'}, {R::i, 'C', 'B'}, {R::i, 'B', 'A'}};
    case Mood::Disamis:   return {{R::i, 'C', 'A'}, {R::a, 'C', 'B'}, {R::i, 'B', 'A'}};
    case Mood::Ferison:   return {{R::e, 'C', 'A'}, {R::i, 'C', 'B'}, {R::o, 'B', 'A'}};
    case Mood::Bocardo:   return {{R::o, 'C', 'A'}, {R::a, 'C', 'B'}, {R::o, 'B', 'A'}};
  }
  return {};
}

/// Modality letter of one slot of a pattern such as "NXN" or "XKM".
enum class Slot : char { N = 'N', X = 'X', K = 'K', M = 'M' };

/// Modalities of major premise, minor premise and conclusion. With `refute`
/// set the conclusion is a claim to be refuted; an absent conclusion then
/// stands for the default target (necessity for N/X premises).
struct ModalPattern {
  Slot major = Slot::X;
  Slot minor = Slot::X;
  std::optional<Slot> conclusion;
  bool refute = false;

  std::string label() const {
    std::string s{static_cast<char>(major), static_cast<char>(minor)};
    if (conclusion) s.push_back(static_cast<char>(*conclusion));
    if (refute) s.push_back('?');
    return s;
  }

  friend bool operator==(const ModalPattern&, const ModalPattern&) = default;
};

/// Premises, non-emptiness side conditions and the claimed conclusion.
struct Inference {
  std::string name;
  std::vector<Statement> premises;
  std::vector<char> nonempty;  // concept letters whose actual extent must be inhabited
  Statement conclusion;
};

}  // namespace apodeixis
