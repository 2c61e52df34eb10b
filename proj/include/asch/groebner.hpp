#ifndef ASCH_GROEBNER_HPP
#define ASCH_GROEBNER_HPP

#include "asch/poly.hpp"

namespace asch {

/// Remainder of f on multivariate division by the (nonzero) divisors.
MPoly reduce(const MPoly& f, const std::vector<MPoly>& divisors);

/// Reduced Groebner basis of the ideal generated by gens, in the ring's
/// active order. Buchberger with normal selection and both standard pair
/// criteria; output is interreduced, monic, and sorted, so it is unique
/// and deterministic for a fixed ring.
std::vector<MPoly> groebner(const std::vector<MPoly>& gens);

/// Post-check: every S-polynomial of the basis reduces to zero. Used by
/// tests as an independent certificate; returns false instead of throwing.
bool is_groebner_basis(const std::vector<MPoly>& basis);

/// True iff the basis is {1} up to scaling (the unit ideal).
bool basis_is_unit(const std::vector<MPoly>& basis);

/// Ideal membership against an already-computed basis.
bool in_ideal(const MPoly& f, const std::vector<MPoly>& basis);

/// Generators of I ∩ k[kept vars]: computed with a one-block lex
/// elimination ring in which the dropped variables come first.
std::vector<MPoly> eliminate(const Ring& r, const std::vector<MPoly>& gens,
                             const std::vector<std::string>& drop);

/// Saturation (I : f^inf) via a fresh inverse variable and elimination.
std::vector<MPoly> saturate(const Ring& r, const std::vector<MPoly>& gens,
                            const MPoly& f);

}  // namespace asch

#endif
