#pragma once

// Surface syntax for statements and mood/pattern names.
//
//   stmt := [mod "("] term rel term [")"]
//   mod  := "N" | "Kamp" | "K" | "Ma2" | "Mo2" | "Mo3"
//   rel  := "a" | "e" | "i" | "o"
//   term := ["~"] letter
//
// A statement without a modality is assertoric. "K" is the two-sided
// contingency; the ampliated reading is spelled "Kamp". The UTF-8 sign "¬"
// is accepted in place of "~" on input.

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "apodeixis/error.hpp"
#include "apodeixis/mood.hpp"
#include "apodeixis/semantics.hpp"

namespace apodeixis {

inline std::string_view modality_token(Modality m) {
  switch (m) {
    case Modality::X: return "";
    case Modality::N: return "N";
    case Modality::Kamp: return "Kamp";
    case Modality::Ktwo: return "K";
    case Modality::Ma2: return "Ma2";
    case Modality::Mo2: return "Mo2";
    case Modality::Mo3: return "Mo3";
  }
  return "";
}

inline std::string to_string(Term t) {
  std::string s;
  if (t.complemented) s.push_back('~');
  s.push_back(t.base);
  return s;
}

inline std::string to_string(const Statement& s) {
  std::string core = to_string(s.subject) + static_cast<char>(s.relation) + to_string(s.predicate);
  if (s.modality == Modality::X) return core;
  return std::string(modality_token(s.modality)) + "(" + core + ")";
}

namespace detail {

class StatementParser {
 public:
  explicit StatementParser(std::string_view text) : text_(text) {}

  Statement parse() {
    skip_ws();
    const std::size_t start = pos_;
    Statement s;
    s.modality = modality_prefix();
    const bool modal = s.modality != Modality::X;
    if (modal) expect('(');
    skip_ws();
    s.subject = term();
    skip_ws();
    s.relation = relation();
    skip_ws();
    s.predicate = term();
    skip_ws();
    if (modal) expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_, text_.size());
    if (!supported(s.modality, s.relation)) {
      fail("unsupported modality/relation pair " + std::string(modality_token(s.modality)) + "/" +
               static_cast<char>(s.relation),
           start, pos_);
    }
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t begin, std::size_t end) const {
    throw ParseError(what, SourceSpan{begin, end});
  }
  [[noreturn]] void fail_here(const std::string& what) const {
    fail(what, pos_, pos_ < text_.size() ? pos_ + 1 : pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Modality modality_prefix() {
    static constexpr std::array<std::pair<std::string_view, Modality>, 6> kTokens{{
        {"Kamp", Modality::Kamp},
        {"Ma2", Modality::Ma2},
        {"Mo2", Modality::Mo2},
        {"Mo3", Modality::Mo3},
        {"N", Modality::N},
        {"K", Modality::Ktwo},
    }};
    for (const auto& [token, modality] : kTokens) {
      if (text_.substr(pos_).starts_with(token)) {
        std::size_t after = pos_ + token.size();
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
        if (after < text_.size() && text_[after] == '(') {
          pos_ += token.size();
          skip_ws();
          return modality;
        }
      }
    }
    return Modality::X;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail_here(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term term() {
    Term t;
    if (pos_ < text_.size() && text_[pos_] == '~') {
      t.complemented = true;
      ++pos_;
    } else if (text_.substr(pos_).starts_with("\xC2\xAC")) {
      t.complemented = true;
      pos_ += 2;
    }
    if (pos_ >= text_.size() || text_[pos_] < 'A' || text_[pos_] > 'Z') {
      fail_here("expected a concept letter A-Z");
    }
    t.base = text_[pos_++];
    return t;
  }

  Relation relation() {
    if (pos_ < text_.size()) {
      switch (text_[pos_]) {
        case 'a': ++pos_; return Relation::a;
        case 'e': ++pos_; return Relation::e;
        case 'i': ++pos_; return Relation::i;
        case 'o': ++pos_; return Relation::o;
        default: break;
      }
    }
    fail_here("expected a relation letter a, e, i or o");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Statement parse_statement(std::string_view text) { return detail::StatementParser(text).parse(); }

// ---------------------------------------------------------------------------
// Moods

inline std::string to_string(Mood m, const ModalPattern& p) {
  return std::string(mood_name(m)) + " " + p.label();
}

/// Parses e.g. "Barbara NXN", "baroco nx?", "Celarent NKX". Case-insensitive.
/// A two-letter pattern, with or without "?", is a refutation target.
inline std::pair<Mood, ModalPattern> parse_mood(std::string_view text) {
  auto lower = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  const std::size_t name_begin = pos;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t name_end = pos;
  std::optional<Mood> mood;
  for (Mood m : kAllMoods) {
    const auto name = mood_name(m);
    if (name.size() != name_end - name_begin) continue;
    bool same = true;
    for (std::size_t k = 0; k < name.size(); ++k) same = same && lower(name[k]) == lower(text[name_begin + k]);
    if (same) mood = m;
  }
  if (!mood) {
    throw ParseError("unknown mood '" + std::string(text.substr(name_begin, name_end - name_begin)) + "'",
                     SourceSpan{name_begin, std::max(name_end, std::min(name_begin + 1, text.size()))});
  }

  skip_ws();
  const std::size_t pat_begin = pos;
  std::string letters;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
    letters.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos]))));
    ++pos;
  }
  bool question = false;
  if (pos < text.size() && text[pos] == '?') {
    question = true;
    ++pos;
  }
  const std::size_t pat_end = pos;
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected trailing input", SourceSpan{pos, text.size()});

  const SourceSpan pat_span{pat_begin, std::max(pat_end, std::min(pat_begin + 1, text.size()))};
  if (letters.size() < 2 || letters.size() > 3) {
    throw ParseError("malformed modal pattern (expected two or three of N, X, K, M)", pat_span);
  }
  auto slot = [&](char c, bool premise, std::size_t offset) {
    switch (c) {
      case 'N': return Slot::N;
      case 'X': return Slot::X;
      case 'K': return Slot::K;
      case 'M':
        if (!premise) return Slot::M;
        [[fallthrough]];
      default:
        throw ParseError(std::string("malformed modal pattern: '") + c + "' not allowed here",
                         SourceSpan{pat_begin + offset, pat_begin + offset + 1});
    }
  };
  ModalPattern p;
  p.major = slot(letters[0], true, 0);
  p.minor = slot(letters[1], true, 1);
  if (letters.size() == 3) p.conclusion = slot(letters[2], false, 2);
  p.refute = question || letters.size() == 2;
  return {*mood, p};
}

}  // namespace apodeixis
