#pragma once

#include "mockparts/odd_ferrers.hpp"

#include <optional>

namespace mockparts {

/* Constructive size-preserving maps between the partition families and
 * odd Ferrers diagrams, with the part/row statistics each one carries. */

/* omega-A partition -> odd Ferrers diagram: remove one instance of the
 * largest part mu_1, merge each remaining consecutive pair (a, a+1) into
 * the odd part 2a+1, return (mu_1, merged parts). The part count maps to
 * rows(F) + rows_with_two(F). Throws std::domain_error when the input is
 * not in the omega-A family. */
OddFerrersDiagram omega_to_ferrers(const Partition& p);

/* Inverse: split each odd part 2a+1 of lambda into the pair (a+1, a),
 * drop the zeros, insert the first-row length as a part. */
Partition ferrers_to_omega(const OddFerrersDiagram& f);

/* Distinct-lambda odd Ferrers diagram -> nu-A partition. Peels the
 * maximal staircase subdiagram (first row ell = length(lambda), then
 * 2-modular rows 2*ell-1, 2*ell-3, ..., 1) into the even parts
 * (2*ell, ..., 4, 2); the left-shifted residue transposes into the
 * 2-modular diagram of the odd parts. length(pi) = k and the even-part
 * count of pi is length(lambda). Throws when lambda has repeats. */
Partition ferrers_to_nu(const OddFerrersDiagram& f);

/* Inverse of ferrers_to_nu. Throws when the input is not in nu-A. */
OddFerrersDiagram nu_to_ferrers(const Partition& p);

enum class NuMoveKind { kMovedCaseI, kMovedCaseII, kFixed };

/* Outcome of the pentagonal-type involution on the nu-A family. Moved
 * outcomes carry an image of the same size with the opposite parity of
 * part count; at most one element per size is fixed. */
struct NuInvolutionOutcome {
	NuMoveKind kind;
	std::optional<Partition> image;
};

/* The two readings of the second involution case ("add two columns of
 * height (s-1)/2"): kAddColumns appends the two cells to each of the
 * (s-1)/2 largest remaining odd parts; kAddParts inserts two literal
 * parts of that height. Only kAddColumns yields a size-preserving
 * involution (the other is kept for the comparison tests). */
enum class NuCaseTwoReading { kAddColumns, kAddParts };

NuInvolutionOutcome nu_pentagonal_involution(
	const Partition& p,
	NuCaseTwoReading reading = NuCaseTwoReading::kAddColumns);

/* Membership in the fixed family: all odd parts equal 2k+1 where 2k is
 * the largest even part, with multiplicity k or k+1. */
bool is_nu_fixed_point(const Partition& p);

}  // namespace mockparts
