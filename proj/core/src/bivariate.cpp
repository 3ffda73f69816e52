#include "mockparts/bivariate.hpp"

#include <algorithm>

namespace mockparts {

namespace {
const Integer kZero{0};
}

BivariateSeries::BivariateSeries(int order)
{
	if (order < 0)
		throw std::invalid_argument("BivariateSeries: order must be non-negative");
	rows_.resize(static_cast<std::size_t>(order) + 1);
}

BivariateSeries BivariateSeries::one(int order)
{
	BivariateSeries s(order);
	s.rows_[0].assign(1, Integer(1));
	return s;
}

BivariateSeries BivariateSeries::monomial(int z_exp, int q_exp, Integer coefficient,
					  int order)
{
	if (z_exp < 0 || q_exp < 0)
		throw std::invalid_argument("BivariateSeries: negative exponent");
	BivariateSeries s(order);
	if (q_exp <= order) {
		auto& row = s.rows_[static_cast<std::size_t>(q_exp)];
		row.assign(static_cast<std::size_t>(z_exp) + 1, Integer(0));
		row.back() = std::move(coefficient);
	}
	return s;
}

BivariateSeries BivariateSeries::from_univariate(const QSeries& u)
{
	BivariateSeries s(u.order());
	for (int n = 0; n <= u.order(); ++n)
		if (!u.coeff(n).is_zero())
			s.rows_[static_cast<std::size_t>(n)].assign(1, u.coeff(n));
	return s;
}

int BivariateSeries::row_width(int n) const
{
	if (n < 0 || n > order())
		throw std::out_of_range("BivariateSeries::row_width");
	return static_cast<int>(rows_[static_cast<std::size_t>(n)].size());
}

int BivariateSeries::z_degree() const
{
	int deg = -1;
	for (const auto& row : rows_)
		for (int m = static_cast<int>(row.size()) - 1; m >= 0; --m)
			if (!row[static_cast<std::size_t>(m)].is_zero()) {
				deg = std::max(deg, m);
				break;
			}
	return deg;
}

const Integer& BivariateSeries::coeff(int m, int n) const
{
	if (n < 0 || n > order())
		throw std::out_of_range("BivariateSeries::coeff: q-exponent " +
					std::to_string(n) + " outside order " +
					std::to_string(order()));
	if (m < 0)
		throw std::out_of_range("BivariateSeries::coeff: negative z-exponent");
	const auto& row = rows_[static_cast<std::size_t>(n)];
	if (static_cast<std::size_t>(m) >= row.size())
		return kZero;
	return row[static_cast<std::size_t>(m)];
}

void BivariateSeries::add_coeff(int m, int n, const Integer& value)
{
	if (n < 0 || n > order() || m < 0)
		throw std::out_of_range("BivariateSeries::add_coeff");
	auto& row = rows_[static_cast<std::size_t>(n)];
	if (static_cast<std::size_t>(m) >= row.size())
		row.resize(static_cast<std::size_t>(m) + 1, Integer(0));
	row[static_cast<std::size_t>(m)] += value;
}

BivariateSeries BivariateSeries::truncated(int new_order) const
{
	if (new_order > order())
		throw std::invalid_argument(
			"BivariateSeries::truncated: cannot extend a truncated series");
	BivariateSeries s(new_order);
	std::copy(rows_.begin(), rows_.begin() + new_order + 1, s.rows_.begin());
	return s;
}

BivariateSeries BivariateSeries::shifted(int z_shift, int q_shift) const
{
	if (z_shift < 0 || q_shift < 0)
		throw std::invalid_argument("BivariateSeries::shifted: negative shift");
	BivariateSeries s(order());
	for (int n = 0; n + q_shift <= order(); ++n) {
		const auto& row = rows_[static_cast<std::size_t>(n)];
		if (row.empty())
			continue;
		auto& dst = s.rows_[static_cast<std::size_t>(n + q_shift)];
		dst.assign(row.size() + static_cast<std::size_t>(z_shift), Integer(0));
		std::copy(row.begin(), row.end(), dst.begin() + z_shift);
	}
	return s;
}

BivariateSeries BivariateSeries::z_squared() const
{
	BivariateSeries s(order());
	for (int n = 0; n <= order(); ++n) {
		const auto& row = rows_[static_cast<std::size_t>(n)];
		if (row.empty())
			continue;
		auto& dst = s.rows_[static_cast<std::size_t>(n)];
		dst.assign(2 * row.size() - 1, Integer(0));
		for (std::size_t m = 0; m < row.size(); ++m)
			dst[2 * m] = row[m];
	}
	return s;
}

BivariateSeries BivariateSeries::operator-() const
{
	BivariateSeries s = *this;
	for (auto& row : s.rows_)
		for (auto& c : row)
			c = -c;
	return s;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs)
{
	if (rhs.order() < order())
		*this = truncated(rhs.order());
	for (int n = 0; n <= order(); ++n) {
		const auto& src = rhs.rows_[static_cast<std::size_t>(n)];
		auto& dst = rows_[static_cast<std::size_t>(n)];
		if (dst.size() < src.size())
			dst.resize(src.size(), Integer(0));
		for (std::size_t m = 0; m < src.size(); ++m)
			dst[m] += src[m];
	}
	return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs)
{
	if (rhs.order() < order())
		*this = truncated(rhs.order());
	for (int n = 0; n <= order(); ++n) {
		const auto& src = rhs.rows_[static_cast<std::size_t>(n)];
		auto& dst = rows_[static_cast<std::size_t>(n)];
		if (dst.size() < src.size())
			dst.resize(src.size(), Integer(0));
		for (std::size_t m = 0; m < src.size(); ++m)
			dst[m] -= src[m];
	}
	return *this;
}

BivariateSeries& BivariateSeries::mul_factor(const Integer& c, int a, int e)
{
	if (a < 0 || e < 0 || (a == 0 && e == 0))
		throw std::invalid_argument("BivariateSeries::mul_factor: bad exponents");
	if (e >= 1) {
		/* Descending in n keeps source rows untouched. */
		for (int n = order(); n >= e; --n) {
			const auto& src = rows_[static_cast<std::size_t>(n - e)];
			for (int m = static_cast<int>(src.size()) - 1; m >= 0; --m)
				if (!src[static_cast<std::size_t>(m)].is_zero())
					add_coeff(m + a, n, c * src[static_cast<std::size_t>(m)]);
		}
	} else {
		/* Pure z-factor: descending in m within each row. */
		for (auto& row : rows_) {
			const int width = static_cast<int>(row.size());
			if (width == 0)
				continue;
			row.resize(static_cast<std::size_t>(width + a), Integer(0));
			for (int m = width - 1; m >= 0; --m)
				if (!row[static_cast<std::size_t>(m)].is_zero())
					row[static_cast<std::size_t>(m + a)] +=
						c * row[static_cast<std::size_t>(m)];
		}
	}
	return *this;
}

BivariateSeries& BivariateSeries::div_factor(const Integer& c, int a, int e)
{
	if (a < 0 || e < 1)
		throw std::invalid_argument(
			"BivariateSeries::div_factor: q-exponent must be >= 1");
	/* r*(1 + c z^a q^e) = s  =>  r_{m,n} = s_{m,n} - c*r_{m-a,n-e};
	 * ascending in n, the source row is already final. */
	for (int n = e; n <= order(); ++n) {
		const auto& src = rows_[static_cast<std::size_t>(n - e)];
		for (std::size_t m = 0; m < src.size(); ++m)
			if (!src[m].is_zero())
				add_coeff(static_cast<int>(m) + a, n, -c * src[m]);
	}
	return *this;
}

void BivariateSeries::normalize()
{
	for (auto& row : rows_)
		while (!row.empty() && row.back().is_zero())
			row.pop_back();
}

bool BivariateSeries::is_zero() const
{
	for (const auto& row : rows_)
		for (const auto& c : row)
			if (!c.is_zero())
				return false;
	return true;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b)
{
	if (a.order() != b.order())
		return false;
	for (int n = 0; n <= a.order(); ++n) {
		const int w = std::max(a.row_width(n), b.row_width(n));
		for (int m = 0; m < w; ++m)
			if (a.coeff(m, n) != b.coeff(m, n))
				return false;
	}
	return true;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b)
{
	BivariateSeries s = a.truncated(std::min(a.order(), b.order()));
	s += b;
	return s;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b)
{
	BivariateSeries s = a.truncated(std::min(a.order(), b.order()));
	s -= b;
	return s;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
{
	const int order = std::min(a.order(), b.order());
	BivariateSeries s(order);
	for (int n1 = 0; n1 <= order; ++n1) {
		for (int m1 = 0; m1 < a.row_width(n1); ++m1) {
			const Integer& c1 = a.coeff(m1, n1);
			if (c1.is_zero())
				continue;
			for (int n2 = 0; n1 + n2 <= order; ++n2)
				for (int m2 = 0; m2 < b.row_width(n2); ++m2) {
					const Integer& c2 = b.coeff(m2, n2);
					if (!c2.is_zero())
						s.add_coeff(m1 + m2, n1 + n2, c1 * c2);
				}
		}
	}
	return s;
}

QSeries eval_z(const BivariateSeries& s, int z0)
{
	if (z0 != 1 && z0 != -1)
		throw std::invalid_argument("eval_z: z0 must be +1 or -1");
	QSeries u(s.order());
	for (int n = 0; n <= s.order(); ++n) {
		Integer acc = 0;
		for (int m = 0; m < s.row_width(n); ++m) {
			const Integer& c = s.coeff(m, n);
			if (c.is_zero())
				continue;
			if (z0 == 1 || m % 2 == 0)
				acc += c;
			else
				acc -= c;
		}
		u.set_coeff(n, std::move(acc));
	}
	return u;
}

QSeries dz_eval(const BivariateSeries& s, int z0)
{
	if (z0 != 1 && z0 != -1)
		throw std::invalid_argument("dz_eval: z0 must be +1 or -1");
	QSeries u(s.order());
	for (int n = 0; n <= s.order(); ++n) {
		Integer acc = 0;
		for (int m = 1; m < s.row_width(n); ++m) {
			const Integer& c = s.coeff(m, n);
			if (c.is_zero())
				continue;
			if (z0 == 1 || (m - 1) % 2 == 0)
				acc += m * c;
			else
				acc -= m * c;
		}
		u.set_coeff(n, std::move(acc));
	}
	return u;
}

namespace {

void require_poch_args(int z_exp, int sign, int a, int c, int k)
{
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("q-Pochhammer sign must be +1 or -1");
	if (z_exp < 0 || a < 0 || c < 1 || k < 0)
		throw std::invalid_argument("q-Pochhammer: bad parameters");
	if (a == 0 && z_exp == 0 && k > 0)
		throw std::domain_error("q-Pochhammer: factor 1 - sign*q^0 is not a unit");
}

}  // namespace

BivariateSeries poch_finite(int z_exp, int sign, int a, int c, int k, int order)
{
	require_poch_args(z_exp, sign, a, c, k);
	BivariateSeries s = BivariateSeries::one(order);
	for (int j = 0; j < k; ++j) {
		const long e = static_cast<long>(a) + static_cast<long>(c) * j;
		if (e > order)
			break;
		s.mul_factor(Integer(-sign), z_exp, static_cast<int>(e));
	}
	return s;
}

BivariateSeries poch_infinite(int z_exp, int sign, int a, int c, int order)
{
	if (a < 1)
		throw std::domain_error(
			"poch_infinite: infinite product requires a >= 1");
	const int k = (order - a) / c + 1;
	return poch_finite(z_exp, sign, a, c, std::max(k, 0), order);
}

BivariateSeries inv_poch_finite(int z_exp, int sign, int a, int c, int k, int order)
{
	require_poch_args(z_exp, sign, a, c, k);
	if (a == 0)
		throw std::domain_error(
			"inv_poch_finite: geometric expansion requires a >= 1");
	BivariateSeries s = BivariateSeries::one(order);
	for (int j = 0; j < k; ++j) {
		const long e = static_cast<long>(a) + static_cast<long>(c) * j;
		if (e > order)
			break;
		s.div_factor(Integer(-sign), z_exp, static_cast<int>(e));
	}
	return s;
}

BivariateSeries inv_poch_infinite(int z_exp, int sign, int a, int c, int order)
{
	if (a < 1)
		throw std::domain_error(
			"inv_poch_infinite: infinite product requires a >= 1");
	const int k = (order - a) / c + 1;
	return inv_poch_finite(z_exp, sign, a, c, std::max(k, 0), order);
}

}  // namespace mockparts
