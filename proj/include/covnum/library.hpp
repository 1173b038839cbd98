#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covnum/perm_group.hpp"

namespace covnum::library {

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Dihedral group of the given order (2m), acting on m points for m >= 3.
PermGroup dihedral(std::size_t order);
PermGroup quaternion8();
/// Degrees add; the second factor acts on the points after the first's.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup elementary_abelian(std::size_t p, std::size_t d);

/// Affine groups on the q^n points of GF(q)^n; the point with digit vector
/// (v_0, ..., v_{n-1}) is 1 + sum v_i q^i.
PermGroup affine_general(std::size_t n, std::uint32_t q);
PermGroup affine_special(std::size_t n, std::uint32_t q);
/// x -> a x + b with a in the order-k subgroup of GF(p)^*.
PermGroup frobenius(std::uint32_t p, std::uint32_t k);

/// Projective line over GF(q): points 1..q are field elements 0..q-1 and
/// point q+1 is infinity.
PermGroup projective_special(std::uint32_t q);
PermGroup projective_general(std::uint32_t q);

PermGroup mathieu11();

/// Parse a curated name: S<n>, A<n>, C<n>, D<order>, Q8, V4, C<p>^<d>,
/// AGL(n,q), ASL(n,q), PSL(2,q), PGL(2,q), Frob(p,k), M11, short aliases such
/// as PSL27 / AGL15 / AGL32, and direct products joined by 'x'.
/// Throws UnknownName.
PermGroup by_name(std::string_view name);

/// The curated group list used by batch runs and property tests.
const std::vector<std::string>& names();

}  // namespace covnum::library
