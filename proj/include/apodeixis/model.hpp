#pragma once

// Finite modal models: a parameter set T = {0..t_count-1} with designated
// parameter 0, a world W_t per parameter, individual concepts (one world
// element per parameter) and concepts given as one extent per parameter.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apodeixis/error.hpp"

namespace apodeixis {

using Element = std::uint32_t;

/// An individual concept x, stored as (x_0, ..., x_{T-1}).
using Individual = std::vector<Element>;

/// Sorted, duplicate-free subset of one world.
using Extent = std::vector<Element>;

struct Model {
  std::size_t t_count = 0;
  std::vector<std::uint32_t> world_sizes;
  std::vector<Individual> individuals;
  std::map<char, std::vector<Extent>> concepts;

  bool has_concept(char name) const { return concepts.contains(name); }

  friend bool operator==(const Model&, const Model&) = default;
};

/// One entry per violated invariant; empty iff the model is well formed.
inline std::vector<std::string> validate(const Model& model) {
  std::vector<std::string> out;
  if (model.t_count < 1) out.push_back("t_count must be at least 1");
  if (model.world_sizes.size() != model.t_count) {
    out.push_back("world_sizes has " + std::to_string(model.world_sizes.size()) +
                  " entries, expected t_count = " + std::to_string(model.t_count));
  }
  for (std::size_t t = 0; t < model.world_sizes.size(); ++t) {
    if (model.world_sizes[t] == 0) out.push_back("world_sizes[" + std::to_string(t) + "] is zero");
  }
  const auto size_at = [&](std::size_t t) -> std::uint64_t {
    return t < model.world_sizes.size() ? model.world_sizes[t] : 0;
  };

  for (std::size_t i = 0; i < model.individuals.size(); ++i) {
    const auto& x = model.individuals[i];
    const std::string where = "individuals[" + std::to_string(i) + "]";
    if (x.size() != model.t_count) {
      out.push_back(where + " has " + std::to_string(x.size()) + " components, expected " +
                    std::to_string(model.t_count));
      continue;
    }
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t] >= size_at(t)) {
        out.push_back(where + " component " + std::to_string(t) + " = " + std::to_string(x[t]) +
                      " is outside W_" + std::to_string(t));
      }
    }
  }
  {
    auto sorted = model.individuals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        std::string tuple;
        for (auto e : sorted[i]) tuple += (tuple.empty() ? "" : ",") + std::to_string(e);
        out.push_back("individual (" + tuple + ") occurs more than once");
      }
    }
  }

  for (const auto& [name, extents] : model.concepts) {
    const std::string where = std::string("concept ") + name;
    if (name < 'A' || name > 'Z') out.push_back(where + " is not a single uppercase letter");
    if (extents.size() != model.t_count) {
      out.push_back(where + " has " + std::to_string(extents.size()) + " extents, expected " +
                    std::to_string(model.t_count));
      continue;
    }
    for (std::size_t t = 0; t < extents.size(); ++t) {
      const auto& ext = extents[t];
      for (std::size_t k = 0; k < ext.size(); ++k) {
        if (ext[k] >= size_at(t)) {
          out.push_back(where + " extent " + std::to_string(t) + " contains " +
                        std::to_string(ext[k]) + " outside W_" + std::to_string(t));
        }
        if (k > 0 && ext[k] <= ext[k - 1]) {
          out.push_back(where + " extent " + std::to_string(t) + " is not strictly ascending");
        }
      }
    }
  }
  return out;
}

enum class IndividualPolicy {
  AllFunctions,           // every tuple of W_0 x ... x W_{T-1} is an individual
  AllSubsetsOfFunctions,  // every subset of those tuples
};

struct EnumerationBounds {
  std::size_t t_count = 2;
  std::vector<std::uint32_t> world_sizes{2, 2};
  std::string concept_names = "ABC";
  IndividualPolicy individual_policy = IndividualPolicy::AllSubsetsOfFunctions;
  std::uint64_t max_models = 100'000'000;

  friend bool operator==(const EnumerationBounds&, const EnumerationBounds&) = default;
};

namespace detail {

inline bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return true;
  out = a * b;
  return false;
}

inline bool test_bit_msb(std::uint64_t value, unsigned width, unsigned pos) {
  return (value >> (width - 1 - pos)) & 1U;
}

}  // namespace detail

/// The models admitted by a set of bounds, indexed 0..size()-1.
///
/// Index order coincides with canonical_key order: the individual subset is
/// the most significant component, followed by the extents of each concept
/// (in name order) parameter by parameter. Scanning indices upward therefore
/// visits models from the least key to the greatest.
class ModelSpace {
 public:
  explicit ModelSpace(EnumerationBounds bounds) : bounds_(std::move(bounds)) {
    const auto& b = bounds_;
    if (b.t_count < 1) throw BoundsError("t_count must be at least 1");
    if (b.world_sizes.size() != b.t_count) throw BoundsError("world_sizes length differs from t_count");
    for (auto w : b.world_sizes) {
      if (w == 0) throw BoundsError("world sizes must be positive");
    }
    if (b.concept_names.empty()) throw BoundsError("at least one concept name is required");
    std::string names = b.concept_names;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
      throw BoundsError("concept names must be distinct");
    }
    for (char c : names) {
      if (c < 'A' || c > 'Z') throw BoundsError(std::string("invalid concept name '") + c + "'");
    }
    names_ = names;

    std::uint64_t n_functions = 1;
    for (auto w : b.world_sizes) {
      if (detail::mul_overflows(n_functions, w, n_functions) || n_functions > 62) {
        throw BoundsError("too many individual concepts for enumeration");
      }
    }
    functions_.reserve(n_functions);
    Individual current(b.t_count, 0);
    for (std::uint64_t i = 0; i < n_functions; ++i) {
      functions_.push_back(current);
      for (std::size_t t = b.t_count; t-- > 0;) {
        if (++current[t] < b.world_sizes[t]) break;
        current[t] = 0;
      }
    }

    world_bits_ = 0;
    for (auto w : b.world_sizes) world_bits_ += w;
    if (world_bits_ * names_.size() > 62) throw BoundsError("too many concept extents for enumeration");
    concept_bits_ = static_cast<unsigned>(world_bits_ * names_.size());
    concept_combos_ = std::uint64_t{1} << concept_bits_;
    individual_combos_ = b.individual_policy == IndividualPolicy::AllFunctions
                             ? 1
                             : std::uint64_t{1} << functions_.size();
    if (detail::mul_overflows(individual_combos_, concept_combos_, size_) || size_ > b.max_models) {
      throw BoundsError("bounds admit more than " + std::to_string(b.max_models) +
                        " models (search-space guard)");
    }
  }

  const EnumerationBounds& bounds() const noexcept { return bounds_; }
  std::uint64_t size() const noexcept { return size_; }

  /// All individual concepts of the bounds, in lexicographic tuple order.
  const std::vector<Individual>& functions() const noexcept { return functions_; }

  Model at(std::uint64_t index) const {
    Model m;
    fill(index, m);
    return m;
  }

  /// Overwrites `out` with the model at `index`, reusing its storage.
  void fill(std::uint64_t index, Model& out) const {
    const std::uint64_t individual_rank = index / concept_combos_;
    const std::uint64_t concept_value = index % concept_combos_;

    out.t_count = bounds_.t_count;
    out.world_sizes = bounds_.world_sizes;
    out.individuals.clear();
    if (bounds_.individual_policy == IndividualPolicy::AllFunctions) {
      out.individuals = functions_;
    } else {
      const auto n = static_cast<unsigned>(functions_.size());
      for (unsigned i = 0; i < n; ++i) {
        if (detail::test_bit_msb(individual_rank, n, i)) out.individuals.push_back(functions_[i]);
      }
    }

    if (out.concepts.size() != names_.size()) out.concepts.clear();
    unsigned pos = 0;
    for (char name : names_) {
      auto& extents = out.concepts[name];
      extents.resize(bounds_.t_count);
      for (std::size_t t = 0; t < bounds_.t_count; ++t) {
        auto& ext = extents[t];
        ext.clear();
        for (Element e = 0; e < bounds_.world_sizes[t]; ++e, ++pos) {
          if (detail::test_bit_msb(concept_value, concept_bits_, pos)) ext.push_back(e);
        }
      }
    }
  }

 private:
  EnumerationBounds bounds_;
  std::string names_;
  std::vector<Individual> functions_;
  std::size_t world_bits_ = 0;
  unsigned concept_bits_ = 0;
  std::uint64_t concept_combos_ = 1;
  std::uint64_t individual_combos_ = 1;
  std::uint64_t size_ = 0;
};

/// Deterministic stream of every model admitted by `bounds`, in canonical_key order.
inline auto enumerate(const EnumerationBounds& bounds) {
  return std::views::iota(std::uint64_t{0}, ModelSpace(bounds).size()) |
         std::views::transform([space = ModelSpace(bounds)](std::uint64_t i) { return space.at(i); });
}

// Canonical key layout (version 1):
//   u8 version | u32 t_count | u32 world_size * t_count
//   | individual bitmask over all tuples in lexicographic order, MSB first, padded to bytes
//   | u32 concept count | per concept: u8 name, then per parameter a bitmask over W_t
namespace detail {

inline constexpr std::uint8_t kKeyVersion = 1;

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

inline void put_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      byte = static_cast<unsigned char>(byte << 1);
      if (i + k < bits.size() && bits[i + k]) byte |= 1;
    }
    out.push_back(static_cast<char>(byte));
  }
}

class KeyReader {
 public:
  explicit KeyReader(std::string_view bytes) : bytes_(bytes) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(bytes_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | u8();
    return v;
  }
  std::vector<bool> bits(std::uint64_t n) {
    const std::uint64_t n_bytes = (n + 7) / 8;
    need(n_bytes);
    std::vector<bool> out(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto byte = static_cast<unsigned char>(bytes_[pos_ + i / 8]);
      out[i] = (byte >> (7 - i % 8)) & 1U;
    }
    pos_ += n_bytes;
    return out;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::uint64_t n) const {
    if (bytes_.size() - pos_ < n) throw Error("canonical key is truncated");
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

inline constexpr std::uint64_t kMaxKeyTuples = std::uint64_t{1} << 24;

inline std::uint64_t tuple_count(const std::vector<std::uint32_t>& world_sizes) {
  std::uint64_t n = 1;
  for (auto w : world_sizes) {
    if (mul_overflows(n, w, n) || n > kMaxKeyTuples) throw Error("model too large for a canonical key");
  }
  return n;
}

inline std::uint64_t tuple_rank(const Individual& x, const std::vector<std::uint32_t>& world_sizes) {
  std::uint64_t r = 0;
  for (std::size_t t = 0; t < x.size(); ++t) r = r * world_sizes[t] + x[t];
  return r;
}

}  // namespace detail

/// Injective byte encoding of a valid model. Within fixed world sizes and
/// concept names, byte-wise order equals ModelSpace index order.
inline std::string canonical_key(const Model& model) {
  if (!validate(model).empty()) throw Error("canonical_key requires a valid model");
  std::string out;
  out.push_back(static_cast<char>(detail::kKeyVersion));
  detail::put_u32(out, static_cast<std::uint32_t>(model.t_count));
  for (auto w : model.world_sizes) detail::put_u32(out, w);

  std::vector<bool> present(detail::tuple_count(model.world_sizes), false);
  for (const auto& x : model.individuals) present[detail::tuple_rank(x, model.world_sizes)] = true;
  detail::put_bits(out, present);

  detail::put_u32(out, static_cast<std::uint32_t>(model.concepts.size()));
  for (const auto& [name, extents] : model.concepts) {
    out.push_back(name);
    for (std::size_t t = 0; t < model.t_count; ++t) {
      std::vector<bool> bits(model.world_sizes[t], false);
      for (auto e : extents[t]) bits[e] = true;
      detail::put_bits(out, bits);
    }
  }
  return out;
}

/// Inverse of canonical_key. Individuals come back in lexicographic order.
inline Model decode_key(std::string_view key) {
  detail::KeyReader in(key);
  if (in.u8() != detail::kKeyVersion) throw Error("unsupported canonical key version");
  Model m;
  m.t_count = in.u32();
  if (m.t_count == 0 || m.t_count > 64) throw Error("canonical key has an implausible t_count");
  for (std::size_t t = 0; t < m.t_count; ++t) m.world_sizes.push_back(in.u32());
  const auto n = detail::tuple_count(m.world_sizes);
  const auto present = in.bits(n);
  Individual x(m.t_count, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (present[i]) m.individuals.push_back(x);
    for (std::size_t t = m.t_count; t-- > 0;) {
      if (++x[t] < m.world_sizes[t]) break;
      x[t] = 0;
    }
  }
  const auto n_concepts = in.u32();
  for (std::uint32_t c = 0; c < n_concepts; ++c) {
    const auto name = static_cast<char>(in.u8());
    auto& extents = m.concepts[name];
    for (std::size_t t = 0; t < m.t_count; ++t) {
      const auto bits = in.bits(m.world_sizes[t]);
      Extent ext;
      for (Element e = 0; e < bits.size(); ++e) {
        if (bits[e]) ext.push_back(e);
      }
      extents.push_back(std::move(ext));
    }
  }
  if (!in.done()) throw Error("trailing bytes after canonical key");
  if (auto v = validate(m); !v.empty()) throw Error("canonical key decodes to an invalid model: " + v.front());
  return m;
}

/// Returns a copy with individuals sorted lexicographically (the JSON and key order).
inline Model normalized(Model m) {
  std::sort(m.individuals.begin(), m.individuals.end());
  for (auto& [name, extents] : m.concepts) {
    for (auto& ext : extents) std::sort(ext.begin(), ext.end());
  }
  return m;
}

}  // namespace apodeixis
