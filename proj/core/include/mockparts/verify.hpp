#pragma once

#include "mockparts/mocktheta.hpp"

#include <chrono>
#include <optional>
#include <set>

namespace mockparts {

/* Outcome of checking one named identity or inequality to a given order.
 * A failed report always carries the first discrepancy. */
struct Discrepancy {
	int exponent;
	Integer lhs;
	Integer rhs;
};

struct IdentityReport {
	std::string name;
	int order_checked = 0;
	bool verified = false;
	std::optional<Discrepancy> first_discrepancy;
	std::chrono::milliseconds elapsed{0};
	/* On failure, the coefficients surrounding the first mismatch. */
	std::string detail;
};

/* Finite set of exponents exempted from a coefficient inequality. */
using ExceptionalSet = std::set<int>;

/* Coefficient-wise equality of two series up to the smaller order. */
IdentityReport check_equal(const std::string& name, const QSeries& lhs,
			   const QSeries& rhs);
IdentityReport check_equal(const std::string& name, const BivariateSeries& lhs,
			   const BivariateSeries& rhs);

/* Resolve both sides by catalog name. Unknown names raise
 * std::invalid_argument. */
IdentityReport check_equal_named(const std::string& lhs, const std::string& rhs,
				 int order);

/* Coefficients of s must be >= 0 outside `except` and >= floor outside
 * `floor_except`, for exponents from `from` through the order. */
IdentityReport check_nonneg(const std::string& name, const QSeries& s,
			    const ExceptionalSet& except, const Integer& floor = 0,
			    const ExceptionalSet& floor_except = {}, int from = 1);

/* The omega-family Beck excess at size n, computed three ways: the
 * enumerated part-count difference, the coefficient of the z-derivative
 * difference of the bivariate generating functions, and the number of
 * 2-carrying rows over all odd Ferrers diagrams of size n. Enumeration
 * routes are absent when n exceeds the cap; the series route always
 * runs. */
struct OmegaExcess {
	std::optional<Integer> via_enumeration;
	Integer via_series;
	std::optional<Integer> via_ferrers;
};

OmegaExcess beck_excess_omega(int n, int cap = kDefaultEnumerationCap);

/* The nu-family excess at size n: enumerated part-count difference (zero
 * parts counted), series derivative = c(n), rank sum over distinct odd
 * Ferrers diagrams, and the odd-parts-minus-one sum over the nu-A
 * family. */
struct NuExcess {
	std::optional<Integer> via_enumeration;
	Integer via_series;
	std::optional<Integer> via_ranks;
	std::optional<Integer> via_odd_excess;
};

NuExcess beck_excess_nu(int n, int cap = kDefaultEnumerationCap);

/* Parity split of the nu-A family at size n versus e(n), plus a full
 * replay of the pentagonal involution. */
IdentityReport check_pentagonal_nu(int n_max, int cap = kDefaultEnumerationCap);

/* c(n) odd exactly at eight times a generalized pentagonal number. */
IdentityReport check_parity_c(int n_max);

/* The phi-family headline identity: the z-derivative combination equals
 * F1 - F2 and is coefficient-wise non-negative. */
IdentityReport check_phi_main(int order);

/* b_n <= b_{n-1} + b_{n-4} for 9 <= n <= n_max, plus the sharper
 * (q^4+q-1) F2 >= 0 outside {1,3,4,6,8}. */
IdentityReport check_prop_bs(int n_max);

/* The f_m/g_m decomposition for 1 <= m <= m_max at order 2m+6+margin:
 * remainder non-negative with the expected vanishing order. */
IdentityReport check_lemma_gm(int m_max, int margin);

/* Pair-count corollaries for the omega family. A pair is an odd Ferrers
 * diagram (or an omega-A partition) together with an odd rectangle
 * ((2j+1)^b), j,b >= 1, that fits below the diagram's first row
 * (2j+1 <= 2k-1); the counts match the part/row excesses. */
IdentityReport check_corollaries_omega(int n_max, int cap = kDefaultEnumerationCap);

/* Named checks covering every identity the library asserts. Each check
 * carries its own default truncation order and enumeration bound; the
 * context overrides them only when set explicitly. */
struct CheckContext {
	std::optional<int> order;
	std::optional<int> enum_cap;

	int order_or(int fallback) const { return order.value_or(fallback); }
	int cap_or(int fallback) const;
};

struct RegisteredCheck {
	std::string name;
	std::string description;
	std::function<IdentityReport(const CheckContext&)> run;
};

const std::vector<RegisteredCheck>& check_registry();
const RegisteredCheck* find_check(const std::string& name);

/* Run the named checks (or all of them) in registry order. Unknown names
 * raise std::invalid_argument. */
std::vector<IdentityReport> run_checks(const std::vector<std::string>& names,
				       const CheckContext& ctx);

}  // namespace mockparts
