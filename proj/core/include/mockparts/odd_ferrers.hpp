#pragma once

#include "mockparts/partitions.hpp"

namespace mockparts {

/* An odd Ferrers diagram: a filled Ferrers diagram whose first row holds
 * k ones and whose remaining rows form the 2-modular diagram of a
 * partition lambda with all parts odd. Identified with the pair
 * (k, lambda). The size is the sum of all entries, k + |lambda|.
 *
 * Row lengths of the filled diagram must be non-increasing, which pins
 * the one structural constraint between the two components:
 * k >= ceil((lambda_1 + 1) / 2).
 */
class OddFerrersDiagram {
public:
	OddFerrersDiagram(int first_row, Partition odd_parts);

	int first_row() const { return first_row_; }
	const Partition& odd_parts() const { return odd_parts_; }

	int size() const { return first_row_ + odd_parts_.size(); }

	/* Number of rows of the diagram. */
	int length() const { return odd_parts_.length() + 1; }

	/* Columns minus rows, i.e. k - length(lambda) - 1. */
	int rank() const { return first_row_ - odd_parts_.length() - 1; }

	bool lambda_distinct() const;

	friend bool operator==(const OddFerrersDiagram& a,
			       const OddFerrersDiagram& b) = default;

	std::string to_string() const;

private:
	int first_row_;
	Partition odd_parts_;
};

/* Rows whose 2-modular filling contains a 2, i.e. parts of lambda greater
 * than 1. */
int rows_with_two(const OddFerrersDiagram& f);

/* Transpose of the filled diagram. Involutive, size-preserving, and it
 * exchanges the row count with the column count (so it negates rank). */
OddFerrersDiagram ferrers_conjugate(const OddFerrersDiagram& f);

/* All odd Ferrers diagrams of size n >= 1 (lambda restricted to distinct
 * parts when requested), ordered by decreasing first row then decreasing
 * lambda. */
std::vector<OddFerrersDiagram> enumerate_odd_ferrers(int n, bool distinct_lambda,
						     int cap = kDefaultEnumerationCap);

}  // namespace mockparts
