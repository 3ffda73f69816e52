#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mockparts {

/* All series coefficients are arbitrary-precision signed integers. Every
 * identity handled by this library is exact over the integers, so no
 * floating point appears anywhere. */
using Integer = boost::multiprecision::cpp_int;

/* Truncated formal power series in q with exact integer coefficients.
 *
 * A QSeries of order N stores the coefficients of q^0..q^N exactly; higher
 * terms are discarded. The truncation order is explicit on every
 * constructor, and binary operations yield the minimum of the two orders.
 */
class QSeries {
public:
	/* The zero series of the given order. */
	explicit QSeries(int order);

	static QSeries one(int order);
	static QSeries monomial(int exponent, Integer coefficient, int order);
	static QSeries from_coefficients(std::initializer_list<long> coeffs);

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }

	/* Coefficient of q^n; n must lie in [0, order]. Coefficients beyond
	 * the truncation order are unknown, not zero. */
	const Integer& coeff(int n) const;
	void set_coeff(int n, Integer value);
	void add_coeff(int n, const Integer& value);

	/* Copy truncated to a lower (or equal) order. */
	QSeries truncated(int new_order) const;

	/* Multiplication by q^e, dropping coefficients pushed past the
	 * truncation order. */
	QSeries shifted(int e) const;

	QSeries operator-() const;
	QSeries& operator+=(const QSeries& rhs);
	QSeries& operator-=(const QSeries& rhs);

	/* In-place multiplication by the binomial 1 + c*q^e (e >= 1). */
	QSeries& mul_binomial(const Integer& c, int e);

	/* In-place multiplication by 1/(1 + c*q^e) (e >= 1), i.e. by the
	 * geometric series sum_j (-c)^j q^(j*e). */
	QSeries& div_binomial(const Integer& c, int e);

	/* Exponent of the lowest nonzero coefficient, or -1 if the series is
	 * zero to its order. */
	int low_exponent() const;

	bool is_zero() const { return low_exponent() == -1; }

	friend bool operator==(const QSeries& a, const QSeries& b) = default;

	std::string to_string() const;

private:
	std::vector<Integer> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);

/* Cauchy product truncated at the minimum of the two orders. */
QSeries operator*(const QSeries& a, const QSeries& b);

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);

/* Multiplicative inverse to the truncation order. The constant coefficient
 * must be +1 or -1; anything else is not invertible over the integers and
 * raises std::domain_error. */
QSeries series_inverse(const QSeries& a);

/* a + b*q^e, with b truncated as needed. */
QSeries add_shifted(const QSeries& a, const QSeries& b, int e);

/* Finite q-Pochhammer symbol (sign*q^a; q^c)_k
 *   = prod_{j=0}^{k-1} (1 - sign*q^(a+c*j)),
 * truncated at the given order. Factors whose exponent exceeds the order
 * contribute nothing and are skipped. */
QSeries poch_finite_u(int sign, int a, int c, int k, int order);

/* Infinite q-Pochhammer symbol (sign*q^a; q^c)_infty. Requires a >= 1 so
 * that the product converges as a formal series; a == 0 raises
 * std::domain_error. */
QSeries poch_infinite_u(int sign, int a, int c, int order);

/* Reciprocals 1/(sign*q^a; q^c)_k and 1/(sign*q^a; q^c)_infty. */
QSeries inv_poch_finite_u(int sign, int a, int c, int k, int order);
QSeries inv_poch_infinite_u(int sign, int a, int c, int order);

}  // namespace mockparts
