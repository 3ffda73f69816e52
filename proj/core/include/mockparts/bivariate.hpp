#pragma once

#include "mockparts/qseries.hpp"

namespace mockparts {

/* Truncated series in z and q with exact integer coefficients.
 *
 * Rows are indexed by the q-exponent n in [0, order]; within a row the
 * z-exponent m is unbounded but finitely supported. Rows are stored as
 * jagged dense vectors so that a series whose z-degree stays small (most
 * of the generating functions here have m <= n, occasionally m == n+1
 * from an explicit leading z) costs no more than it needs.
 */
class BivariateSeries {
public:
	explicit BivariateSeries(int order);

	static BivariateSeries one(int order);
	static BivariateSeries monomial(int z_exp, int q_exp, Integer coefficient,
					int order);

	/* Embed a univariate series as the z^0 row block. */
	static BivariateSeries from_univariate(const QSeries& u);

	int order() const { return static_cast<int>(rows_.size()) - 1; }

	/* Width of the stored row for q^n (entries beyond it are zero). */
	int row_width(int n) const;

	/* Largest z-exponent with a nonzero coefficient anywhere. */
	int z_degree() const;

	/* Coefficient of z^m q^n; zero when (m, n) is outside the stored
	 * support, out of range when n exceeds the truncation order. */
	const Integer& coeff(int m, int n) const;
	void add_coeff(int m, int n, const Integer& value);

	BivariateSeries truncated(int new_order) const;

	/* Multiplication by z^a q^e. Coefficients pushed past the q-order
	 * are dropped; the z-direction is never truncated. */
	BivariateSeries shifted(int z_shift, int q_shift) const;

	/* Reindexing z -> z^2 (every z-exponent doubled). */
	BivariateSeries z_squared() const;

	BivariateSeries operator-() const;
	BivariateSeries& operator+=(const BivariateSeries& rhs);
	BivariateSeries& operator-=(const BivariateSeries& rhs);

	/* In-place multiplication by 1 + c*z^a*q^e. */
	BivariateSeries& mul_factor(const Integer& c, int a, int e);

	/* In-place multiplication by 1/(1 + c*z^a*q^e); requires e >= 1 so
	 * the geometric expansion truncates. */
	BivariateSeries& div_factor(const Integer& c, int a, int e);

	/* Drop trailing zero entries from every row. Normalized series with
	 * equal coefficients compare equal. */
	void normalize();

	bool is_zero() const;

	/* Coefficient-wise comparison (ignores trailing zeros); both series
	 * must have the same order. */
	friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

private:
	std::vector<std::vector<Integer>> rows_;
};

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

/* sum_n (sum_m c_{m,n} z0^m) q^n for z0 in {1, -1}. */
QSeries eval_z(const BivariateSeries& s, int z0);

/* Partial derivative in z evaluated at z0 in {1, -1}:
 * sum_n (sum_m m * c_{m,n} * z0^(m-1)) q^n. */
QSeries dz_eval(const BivariateSeries& s, int z0);

/* Bivariate q-Pochhammer symbol (sign*z^z_exp*q^a; q^c)_k
 *   = prod_{j=0}^{k-1} (1 - sign*z^z_exp*q^(a+c*j)).
 * With z_exp = 0 the result degenerates to a univariate series in the z^0
 * rows. */
BivariateSeries poch_finite(int z_exp, int sign, int a, int c, int k, int order);

/* Infinite version; requires a >= 1 (std::domain_error otherwise). Equals
 * poch_finite with every factor up to the truncation order included. */
BivariateSeries poch_infinite(int z_exp, int sign, int a, int c, int order);

/* Reciprocals of the two symbols above; every factor must have a >= 1 so
 * each geometric expansion truncates. */
BivariateSeries inv_poch_finite(int z_exp, int sign, int a, int c, int k, int order);
BivariateSeries inv_poch_infinite(int z_exp, int sign, int a, int c, int order);

}  // namespace mockparts
