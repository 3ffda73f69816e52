#include "mockparts/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace mockparts {

QSeries::QSeries(int order)
{
	if (order < 0)
		throw std::invalid_argument("QSeries: order must be non-negative");
	coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

QSeries QSeries::one(int order)
{
	QSeries s(order);
	s.coeffs_[0] = 1;
	return s;
}

QSeries QSeries::monomial(int exponent, Integer coefficient, int order)
{
	QSeries s(order);
	if (exponent < 0)
		throw std::invalid_argument("QSeries: negative exponent");
	if (exponent <= order)
		s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(coefficient);
	return s;
}

QSeries QSeries::from_coefficients(std::initializer_list<long> coeffs)
{
	QSeries s(static_cast<int>(coeffs.size()) - 1);
	std::size_t n = 0;
	for (long c : coeffs)
		s.coeffs_[n++] = c;
	return s;
}

const Integer& QSeries::coeff(int n) const
{
	if (n < 0 || n > order())
		throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(n) +
					" outside truncation order " + std::to_string(order()));
	return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(int n, Integer value)
{
	if (n < 0 || n > order())
		throw std::out_of_range("QSeries::set_coeff: exponent out of range");
	coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

void QSeries::add_coeff(int n, const Integer& value)
{
	if (n < 0 || n > order())
		throw std::out_of_range("QSeries::add_coeff: exponent out of range");
	coeffs_[static_cast<std::size_t>(n)] += value;
}

QSeries QSeries::truncated(int new_order) const
{
	if (new_order > order())
		throw std::invalid_argument(
			"QSeries::truncated: cannot extend a truncated series");
	QSeries s(new_order);
	std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
	return s;
}

QSeries QSeries::shifted(int e) const
{
	if (e < 0)
		throw std::invalid_argument("QSeries::shifted: negative shift");
	QSeries s(order());
	for (int n = 0; n + e <= order(); ++n)
		s.coeffs_[static_cast<std::size_t>(n + e)] = coeffs_[static_cast<std::size_t>(n)];
	return s;
}

QSeries QSeries::operator-() const
{
	QSeries s(order());
	for (std::size_t n = 0; n < coeffs_.size(); ++n)
		s.coeffs_[n] = -coeffs_[n];
	return s;
}

QSeries& QSeries::operator+=(const QSeries& rhs)
{
	if (rhs.order() < order())
		*this = truncated(rhs.order());
	for (int n = 0; n <= order(); ++n)
		coeffs_[static_cast<std::size_t>(n)] += rhs.coeffs_[static_cast<std::size_t>(n)];
	return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs)
{
	if (rhs.order() < order())
		*this = truncated(rhs.order());
	for (int n = 0; n <= order(); ++n)
		coeffs_[static_cast<std::size_t>(n)] -= rhs.coeffs_[static_cast<std::size_t>(n)];
	return *this;
}

QSeries& QSeries::mul_binomial(const Integer& c, int e)
{
	if (e < 1)
		throw std::invalid_argument("QSeries::mul_binomial: exponent must be >= 1");
	/* Descending so each source coefficient is still the original. */
	for (int n = order(); n >= e; --n) {
		const Integer& src = coeffs_[static_cast<std::size_t>(n - e)];
		if (!src.is_zero())
			coeffs_[static_cast<std::size_t>(n)] += c * src;
	}
	return *this;
}

QSeries& QSeries::div_binomial(const Integer& c, int e)
{
	if (e < 1)
		throw std::invalid_argument("QSeries::div_binomial: exponent must be >= 1");
	/* r*(1 + c q^e) = s  =>  r_n = s_n - c*r_{n-e}, ascending. */
	for (int n = e; n <= order(); ++n) {
		const Integer& src = coeffs_[static_cast<std::size_t>(n - e)];
		if (!src.is_zero())
			coeffs_[static_cast<std::size_t>(n)] -= c * src;
	}
	return *this;
}

int QSeries::low_exponent() const
{
	for (int n = 0; n <= order(); ++n)
		if (!coeffs_[static_cast<std::size_t>(n)].is_zero())
			return n;
	return -1;
}

std::string QSeries::to_string() const
{
	std::ostringstream out;
	bool first = true;
	for (int n = 0; n <= order(); ++n) {
		const Integer& c = coeffs_[static_cast<std::size_t>(n)];
		if (c.is_zero())
			continue;
		if (!first)
			out << (c > 0 ? " + " : " - ");
		else if (c < 0)
			out << "-";
		Integer a = abs(c);
		if (n == 0)
			out << a.str();
		else {
			if (a != 1)
				out << a.str() << "*";
			out << "q";
			if (n != 1)
				out << "^" << n;
		}
		first = false;
	}
	if (first)
		out << "0";
	out << " + O(q^" << order() + 1 << ")";
	return out.str();
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
	QSeries s = a.truncated(std::min(a.order(), b.order()));
	s += b;
	return s;
}

QSeries operator-(const QSeries& a, const QSeries& b)
{
	QSeries s = a.truncated(std::min(a.order(), b.order()));
	s -= b;
	return s;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
	const int order = std::min(a.order(), b.order());
	QSeries s(order);
	for (int i = 0; i <= order; ++i) {
		const Integer& ai = a.coeff(i);
		if (ai.is_zero())
			continue;
		for (int j = 0; j + i <= order; ++j) {
			const Integer& bj = b.coeff(j);
			if (!bj.is_zero())
				s.add_coeff(i + j, ai * bj);
		}
	}
	return s;
}

QSeries series_add(const QSeries& a, const QSeries& b)
{
	return a + b;
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
	return a * b;
}

QSeries series_inverse(const QSeries& a)
{
	const Integer& a0 = a.coeff(0);
	if (a0 != 1 && a0 != -1)
		throw std::domain_error(
			"series_inverse: constant term must be +1 or -1, got " + a0.str());
	const int order = a.order();
	QSeries b(order);
	b.set_coeff(0, a0);
	/* b_n = -a_0^{-1} * sum_{k=1}^{n} a_k b_{n-k}; a_0^{-1} = a_0 here. */
	for (int n = 1; n <= order; ++n) {
		Integer acc = 0;
		for (int k = 1; k <= n; ++k) {
			const Integer& ak = a.coeff(k);
			if (!ak.is_zero())
				acc += ak * b.coeff(n - k);
		}
		b.set_coeff(n, -a0 * acc);
	}
	return b;
}

QSeries add_shifted(const QSeries& a, const QSeries& b, int e)
{
	QSeries s = a;
	for (int n = 0; n + e <= s.order() && n <= b.order(); ++n) {
		const Integer& c = b.coeff(n);
		if (!c.is_zero())
			s.add_coeff(n + e, c);
	}
	return s;
}

static void require_sign(int sign)
{
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("q-Pochhammer sign must be +1 or -1");
}

QSeries poch_finite_u(int sign, int a, int c, int k, int order)
{
	require_sign(sign);
	if (a < 0 || c < 1 || k < 0)
		throw std::invalid_argument("poch_finite_u: bad parameters");
	if (a == 0 && k > 0)
		throw std::domain_error("poch_finite_u: factor 1 - sign*q^0 is not a unit");
	QSeries s = QSeries::one(order);
	for (int j = 0; j < k; ++j) {
		const long e = static_cast<long>(a) + static_cast<long>(c) * j;
		if (e > order)
			break;
		s.mul_binomial(Integer(-sign), static_cast<int>(e));
	}
	return s;
}

QSeries poch_infinite_u(int sign, int a, int c, int order)
{
	if (a < 1)
		throw std::domain_error(
			"poch_infinite_u: infinite product requires a >= 1");
	/* Identical to the finite symbol once every factor past the
	 * truncation order is dropped. */
	const int k = (order - a) / c + 1;
	return poch_finite_u(sign, a, c, std::max(k, 0), order);
}

QSeries inv_poch_finite_u(int sign, int a, int c, int k, int order)
{
	require_sign(sign);
	if (a < 0 || c < 1 || k < 0)
		throw std::invalid_argument("inv_poch_finite_u: bad parameters");
	if (a == 0 && k > 0)
		throw std::domain_error("inv_poch_finite_u: factor 1 - sign*q^0 is not a unit");
	QSeries s = QSeries::one(order);
	for (int j = 0; j < k; ++j) {
		const long e = static_cast<long>(a) + static_cast<long>(c) * j;
		if (e > order)
			break;
		s.div_binomial(Integer(-sign), static_cast<int>(e));
	}
	return s;
}

QSeries inv_poch_infinite_u(int sign, int a, int c, int order)
{
	if (a < 1)
		throw std::domain_error(
			"inv_poch_infinite_u: infinite product requires a >= 1");
	const int k = (order - a) / c + 1;
	return inv_poch_finite_u(sign, a, c, std::max(k, 0), order);
}

}  // namespace mockparts
