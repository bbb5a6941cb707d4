#include "mideal/linalg.hpp"

#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "mideal/errors.hpp"

namespace mideal {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

template <class T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

/// target <- a * target + b * source, entries combined by row; zero entries dropped.
template <class T, class Combine>
Column<T> merge(const Column<T>& target, const Column<T>& source, Combine&& combine) {
  Column<T> out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  const T zero{};
  while (i < target.size() || j < source.size()) {
    std::uint32_t row;
    T x = zero, y = zero;
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      row = target[i].first;
      x = target[i++].second;
    } else if (i == target.size() || source[j].first < target[i].first) {
      row = source[j].first;
      y = source[j++].second;
    } else {
      row = target[i].first;
      x = target[i++].second;
      y = source[j++].second;
    }
    T v = combine(x, y);
    if (v != zero) out.emplace_back(row, std::move(v));
  }
  return out;
}

std::size_t rank_mod_p(const SparseMatrix& columns, std::int64_t p) {
  std::unordered_map<std::uint32_t, Column<std::int64_t>> pivots;
  std::size_t r = 0;
  for (const auto& raw : columns) {
    Column<std::int64_t> col;
    for (const auto& [row, v] : raw)
      if (auto m = mod(v, p); m != 0) col.emplace_back(row, m);
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) {
        // Normalize so the pivot entry is 1.
        const std::int64_t inv = inverse(col.back().second, p);
        for (auto& e : col) e.second = e.second * inv % p;
        pivots.emplace(col.back().first, std::move(col));
        ++r;
        break;
      }
      const std::int64_t factor = col.back().second;
      col = merge<std::int64_t>(col, it->second, [&](std::int64_t x, std::int64_t y) { return mod(x - factor * y, p); });
    }
  }
  return r;
}

std::size_t rank_rational(const SparseMatrix& columns) {
  using boost::multiprecision::cpp_int;
  std::unordered_map<std::uint32_t, Column<cpp_int>> pivots;
  std::size_t r = 0;
  for (const auto& raw : columns) {
    Column<cpp_int> col;
    for (const auto& [row, v] : raw)
      if (v != 0) col.emplace_back(row, cpp_int(v));
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) {
        pivots.emplace(col.back().first, std::move(col));
        ++r;
        break;
      }
      const cpp_int a = it->second.back().second;
      const cpp_int b = col.back().second;
      col = merge<cpp_int>(col, it->second, [&](const cpp_int& x, const cpp_int& y) { return a * x - b * y; });
      // Keep entries small: divide out the content of the column.
      cpp_int g = 0;
      for (const auto& e : col) g = gcd(g, abs(e.second));
      if (g > 1)
        for (auto& e : col) e.second /= g;
    }
  }
  return r;
}

}  // namespace

Field::Field(std::uint32_t p) : characteristic(p) {
  if (p != 0 && (p >= (1u << 31) || !is_prime(p))) throw InvalidArgument("field characteristic must be 0 or a prime below 2^31");
}

std::size_t rank(const SparseMatrix& columns, Field field) {
  return field.rational() ? rank_rational(columns) : rank_mod_p(columns, field.characteristic);
}

}  // namespace mideal
