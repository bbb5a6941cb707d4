#include "mideal/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mideal/errors.hpp"
#include "mideal/io.hpp"

namespace mideal {

namespace {

struct FaceHash {
  std::size_t operator()(const SimplicialComplex::Face& f) const noexcept {
    std::size_t h = f.size();
    for (auto v : f) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw InvalidArgument("Betti numbers require a proper nonzero ideal");
}

void record(BettiTable& table, const Monomial& degree, const ReducedHomology& h) {
  for (std::size_t j = 0; j < h.dims.size(); ++j)
    if (h.dims[j] != 0) table.entries[{static_cast<int>(j) + 1, degree}] = h.dims[j];
}

}  // namespace

LcmLattice::LcmLattice(const MonomialIdeal& ideal, std::size_t max_gens) : n_(ideal.num_vars()) {
  require_proper_nonzero(ideal);
  if (ideal.size() > max_gens)
    throw CapExceeded("lcm lattice: " + std::to_string(ideal.size()) + " generators exceed the cap of " + std::to_string(max_gens));
  std::unordered_set<Monomial, MonomialHash> seen{Monomial(n_)};
  std::vector<Monomial> queue{Monomial(n_)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : ideal.gens()) {
      Monomial joined = lcm(queue[head], g);
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  elements_ = std::move(queue);
  std::sort(elements_.begin(), elements_.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : lex_greater(a, b);
  });
  for (const auto& g : ideal.gens()) atoms_.push_back(index_of(g));
}

std::size_t LcmLattice::index_of(const Monomial& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == m) return i;
  throw InvalidArgument(to_string(m) + " is not an element of the lcm lattice");
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
  SimplicialComplex c;
  c.faces_.resize(1);
  c.faces_[0].push_back({});
  std::unordered_set<Face, FaceHash> seen{Face{}};
  for (auto& f : faces) {
    if (!std::is_sorted(f.begin(), f.end())) std::sort(f.begin(), f.end());
    if (!seen.insert(f).second) continue;
    const std::size_t slot = f.size();
    if (c.faces_.size() <= slot) c.faces_.resize(slot + 1);
    c.faces_[slot].push_back(std::move(f));
  }
  for (auto& level : c.faces_) std::sort(level.begin(), level.end());
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  std::set<Face> all;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    const std::size_t k = facet.size();
    if (k > 30) throw CapExceeded("facet too large to expand");
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(facet[i]);
      all.insert(std::move(f));
    }
  }
  return from_faces({all.begin(), all.end()});
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> none;
  const auto slot = static_cast<std::size_t>(k + 1);
  return k >= -1 && slot < faces_.size() ? faces_[slot] : none;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int k = dimension(); k >= -1; --k) {
    for (const auto& f : faces(k)) {
      bool covered = std::any_of(out.begin(), out.end(), [&](const Face& big) {
        return std::includes(big.begin(), big.end(), f.begin(), f.end());
      });
      if (!covered) out.push_back(f);
    }
  }
  return out;
}

std::size_t ReducedHomology::operator()(int k) const {
  const auto slot = static_cast<std::size_t>(k + 1);
  return k >= -1 && slot < dims.size() ? dims[slot] : 0;
}

std::int64_t ReducedHomology::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) chi += (j % 2 == 1 ? 1 : -1) * static_cast<std::int64_t>(dims[j]);
  return chi;
}

ReducedHomology reduced_homology(const SimplicialComplex& complex, Field field) {
  ReducedHomology h;
  if (complex.is_void()) return h;
  const int top = complex.dimension();
  // ranks[k + 1] = rank of d_k : C_k -> C_{k-1}; d_{-1} = 0.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int k = 0; k <= top; ++k) {
    std::unordered_map<SimplicialComplex::Face, std::uint32_t, FaceHash> row_index;
    const auto& lower = complex.faces(k - 1);
    for (std::uint32_t r = 0; r < lower.size(); ++r) row_index.emplace(lower[r], r);
    SparseMatrix d;
    d.reserve(complex.faces(k).size());
    for (const auto& face : complex.faces(k)) {
      SparseColumn col;
      for (std::size_t i = 0; i < face.size(); ++i) {
        SimplicialComplex::Face sub;
        sub.reserve(face.size() - 1);
        for (std::size_t j = 0; j < face.size(); ++j)
          if (j != i) sub.push_back(face[j]);
        col.emplace_back(row_index.at(sub), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      d.push_back(std::move(col));
    }
    ranks[static_cast<std::size_t>(k + 1)] = rank(d, field);
  }
  h.dims.resize(static_cast<std::size_t>(top + 2), 0);
  for (int k = -1; k <= top; ++k) {
    const auto slot = static_cast<std::size_t>(k + 1);
    h.dims[slot] = complex.faces(k).size() - ranks[slot] - ranks[slot + 1];
  }
  while (!h.dims.empty() && h.dims.back() == 0) h.dims.pop_back();
  return h;
}

namespace {

/// Elements strictly between the bottom and `top`, in degree order.
std::vector<std::size_t> open_interval(const LcmLattice& lattice, std::size_t top) {
  const auto& el = lattice.elements();
  std::vector<std::size_t> inner;
  for (std::size_t e = 1; e < el.size(); ++e)
    if (e != top && el[e].divides(el[top])) inner.push_back(e);
  return inner;
}

/// Repeatedly deletes beat points: elements whose strict down-set has a unique
/// maximal element or whose strict up-set has a unique minimal element. The
/// order complex keeps its homotopy type.
std::vector<std::size_t> poset_core(const LcmLattice& lattice, std::vector<std::size_t> points) {
  const auto& el = lattice.elements();
  auto below = [&](std::size_t a, std::size_t b) { return a != b && el[a].divides(el[b]); };
  bool changed = true;
  while (changed && !points.empty()) {
    changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::size_t x = points[i];
      std::vector<std::size_t> down, up;
      for (auto y : points) {
        if (below(y, x)) down.push_back(y);
        if (below(x, y)) up.push_back(y);
      }
      auto unique_extremum = [&](const std::vector<std::size_t>& set, bool maximal) {
        std::size_t count = 0;
        for (auto a : set) {
          bool extreme = std::none_of(set.begin(), set.end(), [&](std::size_t b) { return maximal ? below(a, b) : below(b, a); });
          if (extreme && ++count > 1) return false;
        }
        return count == 1;
      };
      if (unique_extremum(down, true) || unique_extremum(up, false)) {
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return points;
}

SimplicialComplex chains_of(const LcmLattice& lattice, const std::vector<std::size_t>& inner) {
  const auto& el = lattice.elements();
  const std::size_t m = inner.size();
  // above[i] = local indices j > i with inner[i] strictly below inner[j].
  std::vector<std::vector<std::uint32_t>> above(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (el[inner[i]].divides(el[inner[j]])) above[i].push_back(static_cast<std::uint32_t>(j));

  std::vector<SimplicialComplex::Face> chains;
  SimplicialComplex::Face chain;
  auto extend = [&](auto&& self, std::uint32_t last) -> void {
    for (auto next : above[last]) {
      chain.push_back(next);
      chains.push_back(chain);
      self(self, next);
      chain.pop_back();
    }
  };
  for (std::uint32_t i = 0; i < m; ++i) {
    chain.assign(1, i);
    chains.push_back(chain);
    extend(extend, i);
  }
  return SimplicialComplex::from_faces(std::move(chains));
}

void require_interval_top(const LcmLattice& lattice, std::size_t top) {
  if (top == lattice.bottom() || top >= lattice.elements().size())
    throw InvalidArgument("interval top must be a lattice element above the bottom");
}

}  // namespace

SimplicialComplex order_complex(const LcmLattice& lattice, std::size_t top) {
  require_interval_top(lattice, top);
  return chains_of(lattice, open_interval(lattice, top));
}

ReducedHomology order_complex_homology(const LcmLattice& lattice, std::size_t top, Field field) {
  require_interval_top(lattice, top);
  return reduced_homology(chains_of(lattice, poset_core(lattice, open_interval(lattice, top))), field);
}

std::size_t BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, value] : entries) pd = std::max(pd, key.first);
  return static_cast<std::size_t>(pd);
}

std::size_t BettiTable::total(int i) const {
  std::size_t t = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) t += value;
  return t;
}

BettiTable betti_lcm(const MonomialIdeal& ideal, Field field, std::size_t max_gens) {
  const LcmLattice lattice(ideal, max_gens);
  BettiTable table{ideal.num_vars(), field.characteristic, {}};
  for (std::size_t e = 1; e < lattice.elements().size(); ++e)
    record(table, lattice.elements()[e], order_complex_homology(lattice, e, field));
  return table;
}

BettiTable betti_taylor(const MonomialIdeal& ideal, Field field, std::size_t max_gens) {
  require_proper_nonzero(ideal);
  const std::size_t r = ideal.size();
  if (r > max_gens)
    throw CapExceeded("Taylor complex: " + std::to_string(r) + " generators exceed the cap of " + std::to_string(max_gens));
  const auto& gens = ideal.gens();
  const std::uint32_t subsets = 1u << r;
  std::vector<Monomial> label(subsets, Monomial(ideal.num_vars()));
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    label[s] = lcm(label[s & (s - 1)], gens[low]);
  }
  std::set<Monomial> degrees(label.begin() + 1, label.end());

  BettiTable table{ideal.num_vars(), field.characteristic, {}};
  for (const auto& a : degrees) {
    std::vector<SimplicialComplex::Face> faces;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if (label[s] == a || !label[s].divides(a)) continue;
      SimplicialComplex::Face f;
      for (std::uint32_t i = 0; i < r; ++i)
        if (s & (1u << i)) f.push_back(i);
      faces.push_back(std::move(f));
    }
    record(table, a, reduced_homology(SimplicialComplex::from_faces(std::move(faces)), field));
  }
  return table;
}

std::size_t depth_quotient(const MonomialIdeal& ideal, Field field) {
  return betti_lcm(ideal, field).depth_quotient();
}

std::size_t depth_ideal(const MonomialIdeal& ideal, Field field) { return depth_quotient(ideal, field) + 1; }

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : table.entries)
    rows.push_back({{"i", key.first}, {"multidegree", monomial_to_json(key.second)}, {"beta", value}});
  return {{"rows", rows},
          {"summary",
           {{"pd", table.projective_dimension()},
            {"depth_quotient", table.depth_quotient()},
            {"depth_ideal", table.depth_ideal()},
            {"characteristic", table.characteristic}}}};
}

}  // namespace mideal
