#include "mockparts/bijections.hpp"

#include <algorithm>
#include <map>

namespace mockparts {

OddFerrersDiagram omega_to_ferrers(const Partition& p)
{
	if (!in_class(p, PartitionClass::kOmegaA))
		throw std::domain_error("omega_to_ferrers: partition not in the omega-A family: " +
					p.to_string());
	std::map<int, int> mult;
	for (int x : p.parts())
		++mult[x];
	const int k = std::prev(mult.end())->first;
	if (--std::prev(mult.end())->second == 0)
		mult.erase(std::prev(mult.end()));

	std::vector<int> lambda;
	while (!mult.empty()) {
		auto it = std::prev(mult.end());
		const int r = it->first;
		if (--it->second == 0)
			mult.erase(it);
		if (r > 1) {
			auto below = mult.find(r - 1);
			if (--below->second == 0)
				mult.erase(below);
		}
		lambda.push_back(2 * r - 1);
	}
	return OddFerrersDiagram(k, Partition(std::move(lambda)));
}

Partition ferrers_to_omega(const OddFerrersDiagram& f)
{
	std::vector<int> parts{f.first_row()};
	for (int x : f.odd_parts().parts()) {
		const int a = (x - 1) / 2;
		parts.push_back(a + 1);
		if (a > 0)
			parts.push_back(a);
	}
	std::sort(parts.begin(), parts.end(), std::greater<int>());
	return Partition(std::move(parts));
}

Partition ferrers_to_nu(const OddFerrersDiagram& f)
{
	if (!f.lambda_distinct())
		throw std::domain_error("ferrers_to_nu: lambda must have distinct parts");
	const auto& lambda = f.odd_parts().parts();
	const int ell = static_cast<int>(lambda.size());
	const int k = f.first_row();

	/* Row widths of the residue R after removing the staircase and
	 * shifting left: the first row loses ell cells, the row of
	 * lambda_i loses ell - i + 1 of its ceil(lambda_i / 2) cells. */
	std::vector<int> residue_rows{k - ell};
	for (int i = 1; i <= ell; ++i)
		residue_rows.push_back((lambda[static_cast<std::size_t>(i - 1)] + 1) / 2 -
				       (ell - i + 1));

	std::vector<int> parts;
	for (int e = 2 * ell; e >= 2; e -= 2)
		parts.push_back(e);
	/* Column j of R carries a 1 on top and a 2 for each deeper row,
	 * so it transposes to the odd part 2*height - 1. */
	for (int j = 1; j <= k - ell; ++j) {
		int height = 0;
		for (int r : residue_rows)
			if (r >= j)
				++height;
		parts.push_back(2 * height - 1);
	}
	std::sort(parts.begin(), parts.end(), std::greater<int>());
	return Partition(std::move(parts));
}

OddFerrersDiagram nu_to_ferrers(const Partition& p)
{
	if (!in_class(p, PartitionClass::kNuA))
		throw std::domain_error("nu_to_ferrers: partition not in the nu-A family: " +
					p.to_string());
	std::vector<int> odd;
	int ell = 0;
	for (int x : p.parts()) {
		if (x % 2 == 0)
			++ell;
		else
			odd.push_back(x);
	}
	const int k = p.length();
	/* Rebuild the residue row widths from the 2-modular columns of
	 * the odd parts, then re-attach the staircase. */
	std::vector<int> lambda;
	for (int i = 1; i <= ell; ++i) {
		int width = 0;
		for (int x : odd)
			if ((x + 1) / 2 >= i + 1)
				++width;
		lambda.push_back(2 * ((ell - i + 1) + width) - 1);
	}
	return OddFerrersDiagram(k, Partition(std::move(lambda)));
}

bool is_nu_fixed_point(const Partition& p)
{
	int largest_even = 0;
	for (int x : p.parts())
		if (x % 2 == 0)
			largest_even = std::max(largest_even, x);
	int mult = 0;
	for (int x : p.parts())
		if (x % 2 == 1) {
			if (x != largest_even + 1)
				return false;
			++mult;
		}
	return mult == largest_even / 2 || mult == largest_even / 2 + 1;
}

NuInvolutionOutcome nu_pentagonal_involution(const Partition& p, NuCaseTwoReading reading)
{
	if (!in_class(p, PartitionClass::kNuA))
		throw std::domain_error(
			"nu_pentagonal_involution: partition not in the nu-A family: " +
			p.to_string());
	if (is_nu_fixed_point(p))
		return {NuMoveKind::kFixed, std::nullopt};

	std::vector<int> evens, odds;
	for (int x : p.parts())
		(x % 2 == 0 ? evens : odds).push_back(x);
	const int e1 = evens.empty() ? 0 : evens.front();
	const int mo = static_cast<int>(std::count(odds.begin(), odds.end(), e1 + 1));
	const bool case_one = odds.empty() || odds.back() >= 2 * mo + 1;

	if (case_one) {
		/* Remove the largest even part; shear the last two columns
		 * (the mo copies of e1+1 each lose 2); add parts e1-1 and
		 * 2*mo+1. */
		evens.erase(evens.begin());
		for (int i = 0; i < mo; ++i)
			odds[static_cast<std::size_t>(i)] -= 2;
		if (e1 - 1 > 0)
			odds.push_back(e1 - 1);
		odds.push_back(2 * mo + 1);
		std::vector<int> parts(evens);
		parts.insert(parts.end(), odds.begin(), odds.end());
		std::sort(parts.begin(), parts.end(), std::greater<int>());
		return {NuMoveKind::kMovedCaseI, Partition(std::move(parts))};
	}

	/* Remove one copy of the largest odd part e1+1 and one copy of the
	 * smallest odd part s; add the even part e1+2; restore two columns
	 * of height (s-1)/2 on the remaining odd parts. */
	const int s = odds.back();
	odds.erase(std::find(odds.begin(), odds.end(), e1 + 1));
	odds.erase(std::prev(odds.end()));
	const int h = (s - 1) / 2;
	if (reading == NuCaseTwoReading::kAddColumns) {
		for (int i = 0; i < h; ++i)
			odds[static_cast<std::size_t>(i)] += 2;
	} else {
		odds.push_back(h);
		odds.push_back(h);
	}
	std::vector<int> parts(evens);
	parts.push_back(e1 + 2);
	parts.insert(parts.end(), odds.begin(), odds.end());
	std::sort(parts.begin(), parts.end(), std::greater<int>());
	parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
	return {NuMoveKind::kMovedCaseII, Partition(std::move(parts))};
}

}  // namespace mockparts
