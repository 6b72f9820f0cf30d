#pragma once

#include "modcat/module.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratakit::testing {

/// dim Ext^1(M, N) over GF(2) by enumerating every linear X : A -> Hom_k(M, N)
/// with X(xy) = N(y) X(x) + X(y) M(x), modulo X(b) = N(b) Y - Y M(b).
/// Cocycles and coboundaries are counted, so the answer is log2 of the ratio.
inline std::size_t brute_force_ext1(const mod::Module& m, const mod::Module& n) {
  const auto& a = m.algebra();
  const la::Field f = a.field();
  if (f.characteristic() != 2) throw std::invalid_argument("brute_force_ext1 needs GF(2)");
  const std::size_t dm = m.dim(), dn = n.dim(), na = a.dim(), block = dm * dn;
  const std::size_t bits = na * block;
  if (bits > 22) throw std::invalid_argument("brute_force_ext1: search space 2^" + std::to_string(bits) + " too large");
  auto unpack = [&](std::uint64_t code, std::size_t offset, std::size_t count) {
    la::Matrix x(f, dn, dm);
    for (std::size_t i = 0; i < count; ++i)
      if (code >> (offset + i) & 1) x.set(i % dn, i / dn, 1);
    return x;
  };
  auto x_of = [&](const std::vector<la::Matrix>& xs, const la::Matrix& elem) {
    la::Matrix r(f, dn, dm);
    for (std::size_t j = 0; j < na; ++j)
      if (!elem.entry_is_zero(j, 0)) r = r + xs[j];
    return r;
  };
  std::uint64_t cocycles = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<la::Matrix> xs;
    for (std::size_t j = 0; j < na; ++j) xs.push_back(unpack(code, j * block, block));
    bool ok = true;
    for (std::size_t i = 0; i < na && ok; ++i)
      for (std::size_t j = 0; j < na && ok; ++j)
        ok = x_of(xs, a.right_mult(j).col(i)) == n.action(j) * xs[i] + xs[j] * m.action(i);
    if (ok) ++cocycles;
  }
  std::set<std::vector<std::vector<std::string>>> boundaries;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << block); ++code) {
    la::Matrix y = unpack(code, 0, block);
    std::vector<std::vector<std::string>> key;
    for (std::size_t j = 0; j < na; ++j)
      for (auto& row : (n.action(j) * y - y * m.action(j)).to_strings()) key.push_back(row);
    boundaries.insert(key);
  }
  const std::uint64_t b = boundaries.size();
  if (!std::has_single_bit(cocycles) || !std::has_single_bit(b) || cocycles % b)
    throw std::logic_error("brute_force_ext1: counts are not compatible powers of two");
  return static_cast<std::size_t>(std::countr_zero(cocycles / b));
}

}  // namespace stratakit::testing
