#include "mideal/sdepth.hpp"

#include <algorithm>
#include <unordered_set>

#include "mideal/errors.hpp"
#include "mideal/io.hpp"

namespace mideal {

std::string to_string(PosetMode mode) { return mode == PosetMode::ideal ? "ideal" : "quotient"; }

PosetMode parse_mode(const std::string& text) {
  if (text == "ideal") return PosetMode::ideal;
  if (text == "quotient") return PosetMode::quotient;
  throw InvalidArgument("unknown poset mode '" + text + "' (expected ideal or quotient)");
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal& ideal, PosetMode mode, std::optional<Monomial> g,
                                         std::size_t box_cap)
    : ideal_(ideal), mode_(mode), g_(g.value_or(ideal.lcm_of_gens())) {
  if (!ideal.is_proper_nonzero()) throw InvalidArgument("characteristic poset requires a proper nonzero ideal");
  const Monomial lcm_exps = ideal.lcm_of_gens();
  require_same_ring(g_, lcm_exps);
  if (!lcm_exps.divides(g_)) throw InvalidArgument("g must dominate the lcm of the generators");

  const std::size_t n = g_.num_vars();
  strides_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    strides_[i] = box_size_;
    const std::size_t side = std::size_t{g_[i]} + 1;
    if (box_size_ > box_cap / side)
      throw CapExceeded("characteristic poset box exceeds the cap of " + std::to_string(box_cap) + " points");
    box_size_ *= side;
  }

  member_.assign(box_size_, 0);
  std::vector<std::uint64_t> degree(box_size_, 0);
  std::vector<Exponent> e(n, 0);
  for (std::size_t idx = 0; idx < box_size_; ++idx) {
    const Monomial a(e);
    const bool in_ideal = member(ideal, a);
    member_[idx] = (mode == PosetMode::ideal) == in_ideal;
    degree[idx] = a.degree();
    if (member_[idx]) points_.push_back(idx);
    for (std::size_t i = 0; i < n; ++i) {
      if (++e[i] <= g_[i]) break;
      e[i] = 0;
    }
  }
  std::stable_sort(points_.begin(), points_.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
}

bool CharacteristicPoset::in_box(const Monomial& a) const {
  if (a.num_vars() != num_vars()) return false;
  for (std::size_t i = 0; i < num_vars(); ++i)
    if (a[i] > g_[i]) return false;
  return true;
}

bool CharacteristicPoset::contains(const Monomial& a) const { return in_box(a) && member_[index_of(a)] != 0; }

std::size_t CharacteristicPoset::index_of(const Monomial& a) const {
  if (!in_box(a)) throw InvalidArgument(to_string(a) + " lies outside the box [0, g]");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < num_vars(); ++i) idx += a[i] * strides_[i];
  return idx;
}

Monomial CharacteristicPoset::point(std::size_t box_index) const {
  std::vector<Exponent> e(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i) {
    e[i] = static_cast<Exponent>(box_index % (std::size_t{g_[i]} + 1));
    box_index /= std::size_t{g_[i]} + 1;
  }
  return Monomial(std::move(e));
}

std::size_t CharacteristicPoset::value(const Monomial& c) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < num_vars(); ++i) v += c[i] == g_[i];
  return v;
}

namespace {

/// Backtracking over poset points in a fixed linear extension. The first
/// uncovered point b must be the bottom of its interval. Splitting intervals
/// shows it is enough to try tops c with c_j in {b_j, g_j} and value exactly
/// max(k, value(b)), i.e. to pick which free coordinates are raised to g.
class PartitionSearcher {
 public:
  PartitionSearcher(const CharacteristicPoset& poset, std::size_t k, std::uint64_t budget)
      : poset_(poset), k_(k), budget_(budget), n_(poset.num_vars()) {
    covered_.assign(poset.box_size(), 0);
    position_.assign(poset.box_size(), kAbsent);
    for (std::size_t p = 0; p < poset.points().size(); ++p) position_[poset.points()[p]] = p;
    words_ = (poset.points().size() + 63) / 64;
    bits_.assign(words_, 0);
    // Failure memo only where the state vectors stay small.
    memo_limit_ = words_ == 0 || words_ > 64 ? 0 : (std::size_t{1} << 27) / (words_ * 8);
  }

  PartitionSearch run() {
    PartitionSearch result;
    const auto& order = poset_.points();
    if (order.empty()) {
      result.status = SearchStatus::found;
      result.partition = IntervalPartition{};
      return result;
    }
    std::vector<Frame> stack;
    stack.push_back(make_frame(0));
    while (!stack.empty()) {
      Frame& f = stack.back();
      release(f);
      if (!place_next(f)) {
        remember_failure(f.state);
        stack.pop_back();
        continue;
      }
      if (++nodes_ > budget_) {
        result.status = SearchStatus::indeterminate;
        result.nodes = nodes_;
        return result;
      }
      std::size_t p = f.position + 1;
      while (p < order.size() && covered_[order[p]]) ++p;
      if (p == order.size()) {
        result.status = SearchStatus::found;
        result.partition = collect(stack);
        result.nodes = nodes_;
        return result;
      }
      if (known_failure()) continue;
      stack.push_back(make_frame(p));
    }
    result.status = SearchStatus::absent;
    result.nodes = nodes_;
    return result;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  struct Frame {
    std::size_t position = 0;
    std::size_t bottom = 0;
    std::vector<std::uint32_t> candidates;  // bitmask of coordinates raised to g
    std::size_t next = 0;
    std::uint32_t placed_mask = 0;
    std::vector<std::size_t> placed;
    std::vector<std::uint64_t> state;
  };

  Frame make_frame(std::size_t position) {
    Frame f;
    f.position = position;
    f.bottom = poset_.points()[position];
    const Monomial b = poset_.point(f.bottom);
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n_; ++j)
      if (b[j] < poset_.g()[j]) free.push_back(j);
    const std::size_t fixed = n_ - free.size();
    const std::size_t need = k_ > fixed ? k_ - fixed : 0;
    if (need <= free.size()) {
      // All need-subsets of the free coordinates, lexicographic.
      std::vector<std::size_t> idx(need);
      for (std::size_t i = 0; i < need; ++i) idx[i] = i;
      while (true) {
        std::uint32_t mask = 0;
        for (auto i : idx) mask |= 1u << free[i];
        f.candidates.push_back(mask);
        std::size_t i = need;
        while (i > 0 && idx[i - 1] == free.size() - need + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (memo_limit_ > 0) f.state = bits_;
    return f;
  }

  /// Box indices of [b, c] where c raises the masked coordinates of b to g.
  bool interval_cells(std::size_t bottom, std::uint32_t mask, std::vector<std::size_t>& cells) const {
    cells.clear();
    const Monomial b = poset_.point(bottom);
    std::size_t top = bottom;
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < n_; ++j)
      if (mask & (1u << j)) {
        dims.push_back(j);
        top += (poset_.g()[j] - b[j]) * poset_.stride(j);
      }
    if (!poset_.contains_index(top)) return false;
    std::vector<Exponent> t(dims.size(), 0);
    std::size_t idx = bottom;
    while (true) {
      if (covered_[idx]) return false;
      cells.push_back(idx);
      std::size_t d = 0;
      for (; d < dims.size(); ++d) {
        const std::size_t j = dims[d];
        if (b[j] + t[d] < poset_.g()[j]) {
          ++t[d];
          idx += poset_.stride(j);
          break;
        }
        idx -= t[d] * poset_.stride(j);
        t[d] = 0;
      }
      if (d == dims.size()) return true;
    }
  }

  bool place_next(Frame& f) {
    std::vector<std::size_t> cells;
    while (f.next < f.candidates.size()) {
      const std::uint32_t mask = f.candidates[f.next++];
      if (!interval_cells(f.bottom, mask, cells)) continue;
      for (auto c : cells) mark(c, 1);
      f.placed = std::move(cells);
      f.placed_mask = mask;
      return true;
    }
    return false;
  }

  void release(Frame& f) {
    for (auto c : f.placed) mark(c, 0);
    f.placed.clear();
  }

  void mark(std::size_t cell, std::uint8_t on) {
    covered_[cell] = on;
    const std::size_t p = position_[cell];
    if (on)
      bits_[p / 64] |= std::uint64_t{1} << (p % 64);
    else
      bits_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
  }

  static std::size_t hash(const std::vector<std::uint64_t>& v) {
    std::size_t h = v.size();
    for (auto w : v) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  struct StateHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept { return hash(v); }
  };

  bool known_failure() const { return memo_limit_ > 0 && failed_.contains(bits_); }

  void remember_failure(const std::vector<std::uint64_t>& state) {
    if (memo_limit_ > 0 && failed_.size() < memo_limit_) failed_.insert(state);
  }

  IntervalPartition collect(const std::vector<Frame>& stack) const {
    IntervalPartition out;
    for (const auto& f : stack) {
      Monomial b = poset_.point(f.bottom);
      std::vector<Exponent> c(b.exponents().begin(), b.exponents().end());
      for (std::size_t j = 0; j < n_; ++j)
        if (f.placed_mask & (1u << j)) c[j] = poset_.g()[j];
      out.intervals.push_back({std::move(b), Monomial(std::move(c))});
    }
    return out;
  }

  const CharacteristicPoset& poset_;
  std::size_t k_;
  std::uint64_t budget_;
  std::size_t n_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> covered_;
  std::vector<std::size_t> position_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t memo_limit_ = 0;
  std::unordered_set<std::vector<std::uint64_t>, StateHash> failed_;
};

}  // namespace

PartitionSearch admits_partition(const CharacteristicPoset& poset, std::size_t k, std::uint64_t budget) {
  if (k > poset.num_vars()) throw InvalidArgument("k must not exceed the number of variables");
  if (poset.num_vars() > 32) throw CapExceeded("partition search supports at most 32 variables");
  return PartitionSearcher(poset, k, budget).run();
}

CertificateCheck check_certificate(const CharacteristicPoset& poset, const IntervalPartition& partition, std::size_t k) {
  const std::size_t n = poset.num_vars();
  std::vector<std::uint8_t> seen(poset.box_size(), 0);
  for (const auto& [b, c] : partition.intervals) {
    if (b.num_vars() != n || c.num_vars() != n) return {false, "interval has the wrong number of variables", std::nullopt};
    if (!poset.in_box(b) || !poset.in_box(c)) return {false, "interval leaves the box [0, g]", b};
    if (!b.divides(c)) return {false, "interval bottom is not below its top", b};
    if (poset.value(c) < k)
      return {false, "interval value " + std::to_string(poset.value(c)) + " is below k = " + std::to_string(k), c};
    std::vector<Exponent> z(b.exponents().begin(), b.exponents().end());
    while (true) {
      Monomial point(z);
      if (!poset.contains(point)) return {false, "interval contains a point outside the poset", point};
      const std::size_t idx = poset.index_of(point);
      if (seen[idx]) return {false, "point covered twice", point};
      seen[idx] = 1;
      std::size_t j = 0;
      for (; j < n; ++j) {
        if (z[j] < c[j]) {
          ++z[j];
          break;
        }
        z[j] = b[j];
      }
      if (j == n) break;
    }
  }
  for (auto idx : poset.points())
    if (!seen[idx]) return {false, "point not covered", poset.point(idx)};
  return {true, "", std::nullopt};
}

SdepthResult stanley_depth(const CharacteristicPoset& poset, std::uint64_t budget) {
  SdepthResult result;
  // Singletons always give a partition with all values >= 0.
  for (auto idx : poset.points()) {
    Monomial p = poset.point(idx);
    result.certificate.intervals.push_back({p, p});
  }
  for (std::size_t k = 1; k <= poset.num_vars(); ++k) {
    auto search = admits_partition(poset, k, budget);
    result.nodes += search.nodes;
    if (search.status == SearchStatus::found) {
      result.lower_bound = k;
      result.certificate = std::move(*search.partition);
      continue;
    }
    if (search.status == SearchStatus::absent) {
      result.exact = true;
      return result;
    }
    result.note = "node budget exhausted while testing k = " + std::to_string(k);
    return result;
  }
  result.exact = true;
  return result;
}

SdepthResult sdepth_ideal(const MonomialIdeal& ideal, const SdepthOptions& options) {
  return stanley_depth(CharacteristicPoset(ideal, PosetMode::ideal, options.g, options.box_cap), options.budget);
}

SdepthResult sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options) {
  return stanley_depth(CharacteristicPoset(ideal, PosetMode::quotient, options.g, options.box_cap), options.budget);
}

nlohmann::json certificate_to_json(const CharacteristicPoset& poset, const IntervalPartition& partition, std::size_t k) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& [b, c] : partition.intervals) intervals.push_back({monomial_to_json(b), monomial_to_json(c)});
  return {{"mode", to_string(poset.mode())}, {"g", monomial_to_json(poset.g())}, {"k", k}, {"intervals", intervals}};
}

Certificate certificate_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("intervals") || !j.contains("k")) throw InvalidArgument("certificate needs 'k' and 'intervals'");
  Certificate cert;
  try {
    cert.k = j.at("k").get<std::size_t>();
    if (j.contains("mode")) cert.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("g")) cert.g = monomial_from_json(j.at("g"), n);
    for (const auto& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2) throw InvalidArgument("interval must be a [lower, upper] pair");
      cert.partition.intervals.push_back({monomial_from_json(iv[0], n), monomial_from_json(iv[1], n)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

}  // namespace mideal
