#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mockparts {

/* Raised when an enumeration request exceeds the configured cap. The CLI
 * maps it to its resource-cap exit code. */
class enumeration_cap_error : public std::runtime_error {
public:
	enumeration_cap_error(int n, int cap)
		: std::runtime_error("enumeration of n = " + std::to_string(n) +
				     " exceeds cap " + std::to_string(cap) +
				     "; use the series-based computation instead") {}
};

/* Hard ceiling on exhaustive enumeration (about 10^6 unrestricted
 * partitions); the default and any override are clamped to it. */
inline constexpr int kEnumerationHardCap = 60;
inline constexpr int kDefaultEnumerationCap = 60;

/* A partition: non-increasing sequence of positive parts. A single
 * trailing zero part can be opted into; one family of partitions counted
 * here treats e.g. (6,4,2) and (6,4,2,0) as distinct objects, with the
 * zero counted as a part. */
class Partition {
public:
	Partition() = default;

	/* Parts must be positive and non-increasing. */
	explicit Partition(std::vector<int> parts);

	/* Same, plus a trailing zero part. */
	static Partition with_zero_part(std::vector<int> parts);

	/* Positive parts only; the zero part, if any, is a flag. */
	const std::vector<int>& parts() const { return parts_; }
	bool has_zero_part() const { return has_zero_part_; }

	int size() const;

	/* Number of parts, counting the trailing zero when present. */
	int length() const;

	bool empty() const { return parts_.empty() && !has_zero_part_; }

	int largest() const { return parts_.empty() ? 0 : parts_.front(); }
	int smallest_positive() const { return parts_.empty() ? 0 : parts_.back(); }

	friend bool operator==(const Partition& a, const Partition& b) = default;
	friend bool operator<(const Partition& a, const Partition& b);

	std::string to_string() const;

private:
	std::vector<int> parts_;
	bool has_zero_part_ = false;
};

struct PartitionStats {
	int length;       /* parts, counting a trailing zero */
	int odd_parts;    /* positive odd parts */
	int even_parts;   /* positive even parts */
	int rank;         /* largest part minus length */
	int m2_rank;      /* columns minus rows of the 2-modular diagram */
	int durfee_side;  /* side of the largest square in the diagram */
	int big_l;        /* length minus Durfee side */
	int mult_of_1;    /* multiplicity of the part 1 */
};

PartitionStats stats(const Partition& p);

/* Transpose of the Ferrers diagram. Involutive. Not defined for the
 * zero-part extension. */
Partition conjugate(const Partition& p);

bool is_self_conjugate(const Partition& p);

/* Partition families with dedicated generating functions.
 *
 *   kAll          unrestricted
 *   kOmegaA       all parts except one instance of the largest form pairs
 *                 of consecutive non-negative integers, (0,1) allowed
 *   kOmegaB       non-empty, every odd part less than twice the smallest
 *   kNuA          even parts distinct, and every even number below any
 *                 part also occurs (so the even parts are 2,4,...,2k and
 *                 all odd parts are at most 2k+1)
 *   kNuB          distinct parts, every odd part less than twice the
 *                 smallest; a partition into distinct even parts may
 *                 instead carry a trailing zero part (counted separately)
 *   kDistinctOdd  distinct odd parts
 *   kSelfConjugate equal to its own conjugate
 */
enum class PartitionClass {
	kAll,
	kOmegaA,
	kOmegaB,
	kNuA,
	kNuB,
	kDistinctOdd,
	kSelfConjugate,
};

bool in_class(const Partition& p, PartitionClass cls);

/* Every partition of n in the class, exactly once, in lexicographically
 * decreasing order of part sequences. For kNuB the zero-part variants are
 * distinct elements. Throws enumeration_cap_error when n > cap. */
std::vector<Partition> enumerate_partitions(int n, PartitionClass cls,
					    int cap = kDefaultEnumerationCap);

/* Partition of even c >= 4 into two distinct odd parts with the smallest
 * possible difference: (c/2+1, c/2-1) when c = 0 mod 4, else
 * (c/2+2, c/2-2). */
Partition mu_of_c(int c);

std::optional<PartitionClass> partition_class_from_name(const std::string& name);
const char* partition_class_name(PartitionClass cls);

}  // namespace mockparts
