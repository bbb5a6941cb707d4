#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mideal/ideal.hpp"

namespace mideal {

enum class PosetMode { ideal, quotient };

std::string to_string(PosetMode mode);
PosetMode parse_mode(const std::string& text);

/// Exponent vectors a in the box [0, g] with x^a in I (ideal mode) or
/// x^a not in I (quotient mode), ordered componentwise.
///
/// g defaults to the exponent vector of lcm(G(I)); a larger g may be supplied
/// to test that results are stable under bigger boxes.
class CharacteristicPoset {
 public:
  static constexpr std::size_t kDefaultBoxCap = 200000;

  CharacteristicPoset(const MonomialIdeal& ideal, PosetMode mode, std::optional<Monomial> g = std::nullopt,
                      std::size_t box_cap = kDefaultBoxCap);

  PosetMode mode() const noexcept { return mode_; }
  std::size_t num_vars() const noexcept { return g_.num_vars(); }
  const Monomial& g() const noexcept { return g_; }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  std::size_t box_size() const noexcept { return box_size_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Points in ascending total degree, ties broken by box index.
  const std::vector<std::size_t>& points() const noexcept { return points_; }
  bool in_box(const Monomial& a) const;
  /// Membership test for a vector of the box.
  bool contains(const Monomial& a) const;
  bool contains_index(std::size_t box_index) const { return member_[box_index] != 0; }

  std::size_t index_of(const Monomial& a) const;
  Monomial point(std::size_t box_index) const;
  std::size_t stride(std::size_t var) const { return strides_[var]; }

  /// Number of coordinates j with c_j == g_j: the dimension of the Stanley
  /// space x^b K[Z] attached to an interval [b, c].
  std::size_t value(const Monomial& c) const;

 private:
  MonomialIdeal ideal_;
  PosetMode mode_;
  Monomial g_;
  std::size_t box_size_ = 1;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> member_;
  std::vector<std::size_t> points_;
};

struct Interval {
  Monomial lower;
  Monomial upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

enum class SearchStatus { found, absent, indeterminate };
std::string to_string(SearchStatus status);

struct PartitionSearch {
  SearchStatus status = SearchStatus::indeterminate;
  std::optional<IntervalPartition> partition;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Exact backtracking search for an interval partition whose intervals all
/// have value >= k. Running out of budget yields `indeterminate`, never `absent`.
PartitionSearch admits_partition(const CharacteristicPoset& poset, std::size_t k,
                                 std::uint64_t budget = kDefaultNodeBudget);

struct CertificateCheck {
  bool valid = false;
  std::string reason;
  std::optional<Monomial> offending_point;
};

/// Independent checker: intervals lie in the poset, are pairwise disjoint,
/// cover every point, and each has value >= k.
CertificateCheck check_certificate(const CharacteristicPoset& poset, const IntervalPartition& partition, std::size_t k);

struct SdepthOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t box_cap = CharacteristicPoset::kDefaultBoxCap;
  std::optional<Monomial> g;
};

struct SdepthResult {
  bool exact = false;
  /// Largest k with a verified partition found; equals sdepth when exact.
  std::size_t lower_bound = 0;
  IntervalPartition certificate;
  std::uint64_t nodes = 0;
  std::string note;

  std::optional<std::size_t> value() const {
    return exact ? std::optional<std::size_t>(lower_bound) : std::nullopt;
  }
};

/// Scans k upward until the search proves no partition exists.
SdepthResult stanley_depth(const CharacteristicPoset& poset, std::uint64_t budget = kDefaultNodeBudget);
SdepthResult sdepth_ideal(const MonomialIdeal& ideal, const SdepthOptions& options = {});
SdepthResult sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options = {});

/// {"mode": "ideal", "g": [...], "k": 1, "intervals": [[[b...], [c...]], ...]}
nlohmann::json certificate_to_json(const CharacteristicPoset& poset, const IntervalPartition& partition, std::size_t k);

struct Certificate {
  std::optional<PosetMode> mode;
  std::optional<Monomial> g;
  std::size_t k = 0;
  IntervalPartition partition;
};

/// Throws InvalidArgument on malformed input.
Certificate certificate_from_json(const nlohmann::json& j, std::size_t n);

}  // namespace mideal
