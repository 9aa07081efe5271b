#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "griess/qmatrix.hpp"

namespace griess::modular {

/// A few 31-bit primes; products of two residues fit in 64 bits.
inline constexpr std::uint32_t primes[] = {2147483647u, 2147483629u, 2147483587u,
                                           2147483579u, 2147483563u, 2147483549u};

/// x mod p for a rational x, or nullopt if p divides the denominator.
std::optional<std::uint32_t> reduce(const Rational& x, std::uint32_t p);

/// Rank of m modulo p, or nullopt if some denominator vanishes mod p.
/// rank mod p never exceeds the rational rank.
std::optional<std::size_t> rank_mod(const QMatrix& m, std::uint32_t p);

/// Unique solution of the square system a * x == b by p-adic (Dixon)
/// lifting with rational reconstruction. The returned vector has been checked
/// exactly against a * x == b. Returns nullopt when a is singular modulo every
/// prime tried, which in practice means a is singular over Q.
std::optional<QVector> solve_nonsingular(const QMatrix& a, const QVector& b);

/// Smallest (|num|, den) with num == den * residue (mod modulus), or nullopt.
std::optional<Rational> reconstruct(const Integer& residue, const Integer& modulus);

}  // namespace griess::modular
