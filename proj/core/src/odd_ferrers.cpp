#include "mockparts/odd_ferrers.hpp"

#include <algorithm>
#include <sstream>

namespace mockparts {

OddFerrersDiagram::OddFerrersDiagram(int first_row, Partition odd_parts)
	: first_row_(first_row), odd_parts_(std::move(odd_parts))
{
	if (first_row_ < 1)
		throw std::invalid_argument("OddFerrersDiagram: first row must be >= 1");
	if (odd_parts_.has_zero_part())
		throw std::invalid_argument("OddFerrersDiagram: lambda cannot carry a zero part");
	for (int x : odd_parts_.parts())
		if (x % 2 == 0)
			throw std::invalid_argument(
				"OddFerrersDiagram: lambda must have odd parts only");
	if (first_row_ < (odd_parts_.largest() + 1) / 2)
		throw std::invalid_argument(
			"OddFerrersDiagram: first row shorter than the widest 2-modular row");
}

bool OddFerrersDiagram::lambda_distinct() const
{
	const auto& parts = odd_parts_.parts();
	for (std::size_t i = 1; i < parts.size(); ++i)
		if (parts[i] == parts[i - 1])
			return false;
	return true;
}

std::string OddFerrersDiagram::to_string() const
{
	std::ostringstream out;
	out << "(" << first_row_ << "," << odd_parts_.to_string() << ")";
	return out.str();
}

int rows_with_two(const OddFerrersDiagram& f)
{
	int count = 0;
	for (int x : f.odd_parts().parts())
		if (x > 1)
			++count;
	return count;
}

OddFerrersDiagram ferrers_conjugate(const OddFerrersDiagram& f)
{
	/* Column j of the filled diagram holds the first-row 1 plus a 2
	 * for every 2-modular row of width >= j, so it reads back as the
	 * 2-modular row of an odd part. Column 1 (all 1s) becomes the new
	 * first row. */
	const auto& lambda = f.odd_parts().parts();
	std::vector<int> conj;
	for (int j = 2; j <= f.first_row(); ++j) {
		int height = 1;
		for (int x : lambda) {
			if ((x + 1) / 2 >= j)
				++height;
			else
				break;
		}
		conj.push_back(2 * height - 1);
	}
	return OddFerrersDiagram(f.odd_parts().length() + 1, Partition(std::move(conj)));
}

namespace {

void generate_lambda(int remaining, int max_part, bool distinct, std::vector<int>& current,
		     std::vector<Partition>& out)
{
	if (remaining == 0) {
		out.emplace_back(current);
		return;
	}
	int part = std::min(remaining, max_part);
	if (part % 2 == 0)
		--part;
	for (; part >= 1; part -= 2) {
		current.push_back(part);
		generate_lambda(remaining - part, distinct ? part - 2 : part, distinct,
				current, out);
		current.pop_back();
	}
}

}  // namespace

std::vector<OddFerrersDiagram> enumerate_odd_ferrers(int n, bool distinct_lambda, int cap)
{
	if (n < 1)
		throw std::invalid_argument("enumerate_odd_ferrers: n must be >= 1");
	const int effective_cap = std::min(cap, kEnumerationHardCap);
	if (n > effective_cap)
		throw enumeration_cap_error(n, effective_cap);

	std::vector<OddFerrersDiagram> out;
	for (int k = n; k >= 1; --k) {
		std::vector<Partition> lambdas;
		std::vector<int> current;
		generate_lambda(n - k, std::min(2 * k - 1, n - k), distinct_lambda,
				current, lambdas);
		for (auto& lambda : lambdas)
			out.emplace_back(k, std::move(lambda));
	}
	return out;
}

}  // namespace mockparts
