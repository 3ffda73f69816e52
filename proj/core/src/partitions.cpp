#include "mockparts/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mockparts {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (parts_[i] < 1)
			throw std::invalid_argument(
				"Partition: parts must be positive (use "
				"with_zero_part for the trailing-zero convention)");
		if (i > 0 && parts_[i] > parts_[i - 1])
			throw std::invalid_argument("Partition: parts must be non-increasing");
	}
}

Partition Partition::with_zero_part(std::vector<int> parts)
{
	Partition p(std::move(parts));
	p.has_zero_part_ = true;
	return p;
}

int Partition::size() const
{
	return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::length() const
{
	return static_cast<int>(parts_.size()) + (has_zero_part_ ? 1 : 0);
}

bool operator<(const Partition& a, const Partition& b)
{
	/* Lexicographic on the full part sequence, the trailing zero
	 * included, so (6,4,2,0) and (6,4,2) order deterministically. */
	auto key = [](const Partition& p) {
		std::vector<int> k = p.parts();
		if (p.has_zero_part())
			k.push_back(0);
		return k;
	};
	return key(a) < key(b);
}

std::string Partition::to_string() const
{
	if (empty())
		return "()";
	std::ostringstream out;
	out << "(";
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (i)
			out << ",";
		out << parts_[i];
	}
	if (has_zero_part_)
		out << (parts_.empty() ? "0" : ",0");
	out << ")";
	return out.str();
}

PartitionStats stats(const Partition& p)
{
	PartitionStats s{};
	const auto& parts = p.parts();
	s.length = p.length();
	int twomod_cols = 0;
	for (int x : parts) {
		if (x % 2)
			++s.odd_parts;
		else
			++s.even_parts;
		if (x == 1)
			++s.mult_of_1;
		twomod_cols = std::max(twomod_cols, (x + 1) / 2);
	}
	s.rank = p.largest() - s.length;
	s.m2_rank = twomod_cols - static_cast<int>(parts.size());
	int a = 0;
	while (a < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(a)] >= a + 1)
		++a;
	s.durfee_side = a;
	s.big_l = s.length - s.durfee_side;
	return s;
}

Partition conjugate(const Partition& p)
{
	if (p.has_zero_part())
		throw std::domain_error("conjugate: undefined for zero-part partitions");
	const auto& parts = p.parts();
	std::vector<int> conj;
	conj.reserve(static_cast<std::size_t>(p.largest()));
	for (int col = 1; col <= p.largest(); ++col) {
		int h = 0;
		for (int x : parts) {
			if (x >= col)
				++h;
			else
				break;
		}
		conj.push_back(h);
	}
	return Partition(std::move(conj));
}

bool is_self_conjugate(const Partition& p)
{
	return !p.has_zero_part() && conjugate(p) == p;
}

namespace {

/* Membership in the omega-A family is decided through its part-merging
 * bijection with odd Ferrers diagrams: drop one instance of the largest
 * part, then greedily pair the remaining parts from the top. Each part r
 * must pair with a part r-1 (a bare 1 pairs with an implicit 0). */
bool pairs_into_consecutive(std::map<int, int>& mult)
{
	while (!mult.empty()) {
		auto it = std::prev(mult.end());
		const int r = it->first;
		if (--it->second == 0)
			mult.erase(it);
		if (r == 1)
			continue;
		auto below = mult.find(r - 1);
		if (below == mult.end())
			return false;
		if (--below->second == 0)
			mult.erase(below);
	}
	return true;
}

bool in_omega_a(const Partition& p)
{
	if (p.empty() || p.has_zero_part())
		return false;
	std::map<int, int> mult;
	for (int x : p.parts())
		++mult[x];
	auto top = std::prev(mult.end());
	if (--top->second == 0)
		mult.erase(top);
	return pairs_into_consecutive(mult);
}

bool in_omega_b(const Partition& p)
{
	if (p.empty() || p.has_zero_part())
		return false;
	const int s = p.smallest_positive();
	for (int x : p.parts())
		if (x % 2 == 1 && x >= 2 * s)
			return false;
	return true;
}

bool in_nu_a(const Partition& p)
{
	if (p.has_zero_part())
		return false;
	int k = 0;
	for (int x : p.parts())
		if (x % 2 == 0)
			++k;
	/* Distinct even parts forming the full run 2, 4, ..., 2k. */
	int expect = 2 * k;
	for (int x : p.parts()) {
		if (x % 2 == 0) {
			if (x != expect)
				return false;
			expect -= 2;
		} else if (x > 2 * k + 1) {
			return false;
		}
	}
	return true;
}

bool is_distinct(const std::vector<int>& parts)
{
	for (std::size_t i = 1; i < parts.size(); ++i)
		if (parts[i] == parts[i - 1])
			return false;
	return true;
}

bool in_nu_b(const Partition& p)
{
	if (p.has_zero_part()) {
		/* Zero-part variant: distinct even parts plus the zero. */
		if (!is_distinct(p.parts()))
			return false;
		for (int x : p.parts())
			if (x % 2)
				return false;
		return true;
	}
	if (p.empty() || !is_distinct(p.parts()))
		return false;
	const int s = p.smallest_positive();
	for (int x : p.parts())
		if (x % 2 == 1 && x >= 2 * s)
			return false;
	return true;
}

bool in_distinct_odd(const Partition& p)
{
	if (p.has_zero_part())
		return false;
	if (!is_distinct(p.parts()))
		return false;
	for (int x : p.parts())
		if (x % 2 == 0)
			return false;
	return true;
}

void generate(int remaining, int max_part, std::vector<int>& current,
	      const std::function<void(const std::vector<int>&)>& emit)
{
	if (remaining == 0) {
		emit(current);
		return;
	}
	for (int part = std::min(remaining, max_part); part >= 1; --part) {
		current.push_back(part);
		generate(remaining - part, part, current, emit);
		current.pop_back();
	}
}

}  // namespace

bool in_class(const Partition& p, PartitionClass cls)
{
	switch (cls) {
	case PartitionClass::kAll:
		return !p.has_zero_part();
	case PartitionClass::kOmegaA:
		return in_omega_a(p);
	case PartitionClass::kOmegaB:
		return in_omega_b(p);
	case PartitionClass::kNuA:
		return in_nu_a(p);
	case PartitionClass::kNuB:
		return in_nu_b(p);
	case PartitionClass::kDistinctOdd:
		return in_distinct_odd(p);
	case PartitionClass::kSelfConjugate:
		return !p.has_zero_part() && is_self_conjugate(p);
	}
	throw std::invalid_argument("in_class: unknown class");
}

std::vector<Partition> enumerate_partitions(int n, PartitionClass cls, int cap)
{
	if (n < 0)
		throw std::invalid_argument("enumerate_partitions: n must be non-negative");
	const int effective_cap = std::min(cap, kEnumerationHardCap);
	if (n > effective_cap)
		throw enumeration_cap_error(n, effective_cap);

	std::vector<Partition> out;
	std::vector<int> current;
	generate(n, n == 0 ? 1 : n, current, [&](const std::vector<int>& parts) {
		Partition p(parts);
		if (in_class(p, cls))
			out.push_back(std::move(p));
		if (cls == PartitionClass::kNuB) {
			Partition z = Partition::with_zero_part(parts);
			if (in_class(z, PartitionClass::kNuB))
				out.push_back(std::move(z));
		}
	});
	/* The generator already emits in lexicographically decreasing
	 * order; zero-part variants slot in directly after their base. */
	std::sort(out.begin(), out.end(),
		  [](const Partition& a, const Partition& b) { return b < a; });
	return out;
}

Partition mu_of_c(int c)
{
	if (c < 4 || c % 2 != 0)
		throw std::invalid_argument("mu_of_c: requires even c >= 4");
	if (c % 4 == 0)
		return Partition({c / 2 + 1, c / 2 - 1});
	return Partition({c / 2 + 2, c / 2 - 2});
}

std::optional<PartitionClass> partition_class_from_name(const std::string& name)
{
	if (name == "all")
		return PartitionClass::kAll;
	if (name == "a_omega")
		return PartitionClass::kOmegaA;
	if (name == "b_omega")
		return PartitionClass::kOmegaB;
	if (name == "a_nu")
		return PartitionClass::kNuA;
	if (name == "b_nu")
		return PartitionClass::kNuB;
	if (name == "distinct_odd")
		return PartitionClass::kDistinctOdd;
	if (name == "self_conjugate")
		return PartitionClass::kSelfConjugate;
	return std::nullopt;
}

const char* partition_class_name(PartitionClass cls)
{
	switch (cls) {
	case PartitionClass::kAll:
		return "all";
	case PartitionClass::kOmegaA:
		return "a_omega";
	case PartitionClass::kOmegaB:
		return "b_omega";
	case PartitionClass::kNuA:
		return "a_nu";
	case PartitionClass::kNuB:
		return "b_nu";
	case PartitionClass::kDistinctOdd:
		return "distinct_odd";
	case PartitionClass::kSelfConjugate:
		return "self_conjugate";
	}
	return "?";
}

}  // namespace mockparts
