#include "mockparts/mocktheta.hpp"

#include <algorithm>

namespace mockparts {

QSeries omega(int order)
{
	QSeries s(order);
	for (long k = 0; 2 * k * (k + 1) <= order; ++k) {
		QSeries t = inv_poch_finite_u(1, 1, 2, static_cast<int>(k) + 1, order);
		t = t * t;
		s = add_shifted(s, t, static_cast<int>(2 * k * (k + 1)));
	}
	return s;
}

QSeries a_omega(int order)
{
	QSeries s(order);
	for (int k = 1; k <= order; ++k)
		s = add_shifted(s, inv_poch_finite_u(1, 1, 2, k, order - k), k);
	return s;
}

QSeries b_omega(int order)
{
	QSeries s(order);
	for (int k = 1; k <= order; ++k) {
		QSeries t = inv_poch_finite_u(1, k, 1, k + 1, order - k);
		if (2 * k + 2 <= order - k)
			t = t * inv_poch_infinite_u(1, 2 * k + 2, 2, order - k);
		s = add_shifted(s, t, k);
	}
	return s;
}

QSeries a_omega2(int order)
{
	return eval_z(a_omega2_z(order), 1);
}

QSeries a_omega2_tilde(int order)
{
	return eval_z(a_omega2_tilde_z(order), 1);
}

BivariateSeries a_omega_z(int order)
{
	BivariateSeries s(order);
	for (int k = 1; k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(1, k, 1, order);
		t.div_factor(-1, 1, 1);
		for (int j = 0; j < k - 1; ++j) {
			const int e = 3 + 2 * j;
			if (e > order)
				break;
			t.div_factor(-1, 2, e);
		}
		s += t;
	}
	return s;
}

BivariateSeries b_omega_z(int order)
{
	BivariateSeries s(order);
	for (int k = 1; k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(1, k, 1, order);
		for (int j = 0; j <= k; ++j) {
			if (k + j > order)
				break;
			t.div_factor(-1, 1, k + j);
		}
		for (int e = 2 * k + 2; e <= order; e += 2)
			t.div_factor(-1, 1, e);
		s += t;
	}
	return s;
}

BivariateSeries a_omega2_z(int order)
{
	BivariateSeries s(order);
	for (int k = 1; k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(1, k, 1, order);
		for (int j = 0; j < k; ++j) {
			const int e = 2 * j + 1;
			if (e > order)
				break;
			t.div_factor(-1, 1, e);
		}
		s += t;
	}
	return s;
}

BivariateSeries a_omega2_tilde_z(int order)
{
	BivariateSeries s(order);
	for (int k = 1; k <= order; ++k) {
		const QSeries u = inv_poch_finite_u(1, 1, 2, k, order - k);
		for (int n = 0; n <= u.order(); ++n)
			if (!u.coeff(n).is_zero())
				s.add_coeff(k, n + k, u.coeff(n));
	}
	return s;
}

QSeries nu_neg(int order)
{
	QSeries s(order);
	for (long k = 0; k * (k + 1) <= order; ++k)
		s = add_shifted(s, inv_poch_finite_u(1, 1, 2, static_cast<int>(k) + 1, order),
				static_cast<int>(k * (k + 1)));
	return s;
}

QSeries a_nu(int order)
{
	return eval_z(a_nu_z(order), 1);
}

QSeries a_nu2(int order)
{
	QSeries s(order);
	/* (-q;q^2)_k grown incrementally across k. */
	QSeries p = QSeries::one(order);
	for (int k = 0; k <= order; ++k) {
		if (k > 0 && 2 * k - 1 <= order)
			p.mul_binomial(1, 2 * k - 1);
		s = add_shifted(s, p, k);
	}
	return s;
}

QSeries b_nu(int order)
{
	QSeries s(order);
	for (int k = 0; k <= order; ++k) {
		QSeries t = QSeries::one(order - k);
		for (int j = 1; j <= k && k + j <= order - k; ++j)
			t.mul_binomial(1, k + j);
		for (int e = 2 * k + 2; e <= order - k; e += 2)
			t.mul_binomial(1, e);
		s = add_shifted(s, t, k);
	}
	return s;
}

BivariateSeries a_nu_z(int order)
{
	BivariateSeries s(order);
	for (long k = 0; k * k + k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(
			static_cast<int>(k), static_cast<int>(k * k + k), 1, order);
		for (long j = 0; j <= k; ++j) {
			const long e = 2 * j + 1;
			if (e > order)
				break;
			t.div_factor(-1, 1, static_cast<int>(e));
		}
		s += t;
	}
	return s;
}

BivariateSeries a_nu2_z(int order)
{
	BivariateSeries s(order);
	for (int k = 0; k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(1, k, 1, order);
		for (int j = 0; j < k; ++j) {
			const int e = 2 * j + 1;
			if (e > order)
				break;
			t.mul_factor(1, 1, e);
		}
		s += t;
	}
	return s;
}

BivariateSeries b_nu_z(int order)
{
	BivariateSeries s(order);
	for (int k = 0; k <= order; ++k) {
		BivariateSeries t = BivariateSeries::monomial(1, k, 1, order);
		for (int j = 1; j <= k; ++j) {
			if (k + j > order)
				break;
			t.mul_factor(1, 1, k + j);
		}
		for (int e = 2 * k + 2; e <= order; e += 2)
			t.mul_factor(1, 1, e);
		s += t;
	}
	return s;
}

QSeries phi(int order)
{
	QSeries s(order);
	for (long n = 0; n * n <= order; ++n)
		s = add_shifted(s, inv_poch_finite_u(-1, 2, 2, static_cast<int>(n), order),
				static_cast<int>(n * n));
	return s;
}

QSeries phi_alternating(int order)
{
	QSeries s = QSeries::one(order);
	QSeries p = QSeries::one(order);
	for (int n = 0; 2 * n + 1 <= order; ++n) {
		if (n > 0 && 2 * n - 1 <= order)
			p.mul_binomial(-1, 2 * n - 1);
		QSeries term = p.shifted(2 * n + 1);
		if (n % 2)
			s -= term;
		else
			s += term;
	}
	return s;
}

BivariateSeries b_phi_z(int order)
{
	BivariateSeries s = BivariateSeries::one(order);
	QSeries p = QSeries::one(order);
	for (int n = 0; 2 * n + 1 <= order; ++n) {
		if (n > 0 && 2 * n - 1 <= order)
			p.mul_binomial(-1, 2 * n - 1);
		for (int d = 0; d + 2 * n + 1 <= order; ++d)
			if (!p.coeff(d).is_zero())
				s.add_coeff(n, d + 2 * n + 1, p.coeff(d));
	}
	return s;
}

BivariateSeries a_phi_z(int order)
{
	BivariateSeries out(order);
	if (order < 1)
		return out;
	/* Inner sum at one order lower, then the leading factor of q. */
	const int inner_order = order - 1;
	BivariateSeries s(inner_order);
	for (int n = 0; n <= inner_order; ++n) {
		BivariateSeries t = BivariateSeries::monomial(1, n, 1, inner_order);
		for (int j = 1; j <= n; ++j) {
			if (n + j > inner_order)
				break;
			t.mul_factor(1, 1, n + j);
		}
		for (int e = 2 * n + 1; e <= inner_order; e += 2)
			t.mul_factor(1, 1, e);
		s += t;
	}
	for (int n = 0; n <= inner_order; ++n)
		for (int m = 0; m < s.row_width(n); ++m)
			if (!s.coeff(m, n).is_zero())
				out.add_coeff(m, n + 1, s.coeff(m, n));
	return out;
}

QSeries theta_squares(int order)
{
	QSeries s(order);
	for (long n = 1; n * n <= order; ++n)
		s.set_coeff(static_cast<int>(n * n), 1);
	return s;
}

QSeries d_phi_at(int z0, int order)
{
	if (z0 != 1 && z0 != -1)
		throw std::invalid_argument("d_phi_at: z0 must be +1 or -1");
	/* (-z0*q;q^2)_inf, (-q^2/z0;q^2)_inf and the triple-product sum
	 * 1 + sum (z0^n + z0^-n) q^(n^2) are all univariate at z0 = +-1. */
	const QSeries minus_z0q = poch_infinite_u(-z0, 1, 2, order);
	const QSeries denom = poch_infinite_u(-z0, 2, 2, order);
	const QSeries num = poch_infinite_u(-1, 1, 1, order);
	QSeries jtp = QSeries::one(order);
	for (long n = 1; n * n <= order; ++n)
		jtp.add_coeff(static_cast<int>(n * n), 2 * ((z0 == 1 || n % 2 == 0) ? 1 : -1));
	QSeries s = QSeries::one(order);
	if (z0 == 1)
		s -= minus_z0q;
	else
		s += minus_z0q;
	QSeries tail = num * series_inverse(denom) * jtp;
	if (z0 == 1)
		s += tail;
	else
		s -= tail;
	return s;
}

QSeries d_phi_product_form_at(int z0, int order)
{
	if (z0 != 1 && z0 != -1)
		throw std::invalid_argument("d_phi_product_form_at: z0 must be +1 or -1");
	const QSeries minus_z0q = poch_infinite_u(-z0, 1, 2, order);
	const QSeries inner = poch_infinite_u(-1, 1, 1, order) *
			      poch_infinite_u(1, 2, 2, order) *
			      poch_infinite_u(-z0, 1, 2, order) *
			      series_inverse(poch_infinite_u(-z0, 2, 2, order));
	QSeries bracket = inner;
	bracket.add_coeff(0, -1);
	QSeries s = QSeries::one(order);
	const QSeries prod = minus_z0q * bracket;
	if (z0 == 1)
		s += prod;
	else
		s -= prod;
	return s;
}

QSeries f1(int order)
{
	const QSeries theta = theta_squares(order);
	QSeries paren = QSeries::one(order);
	paren += theta;
	paren += theta;
	QSeries s = f3(order) * paren;
	const QSeries tail = poch_infinite_u(-1, 1, 2, order) * theta;
	s += tail;
	s += tail;
	return s;
}

namespace {

/* sum over the arithmetic progression a, a+c, ... of q^e / (1 + q^e),
 * each reciprocal expanded through series_inverse. */
QSeries lambert_sum(int a, int c, int order)
{
	QSeries s(order);
	for (int e = a; e <= order; e += c) {
		QSeries denom = QSeries::one(order - e);
		if (e <= order - e)
			denom.add_coeff(e, 1);
		s = add_shifted(s, series_inverse(denom), e);
	}
	return s;
}

}  // namespace

QSeries f2(int order)
{
	return poch_infinite_u(-1, 1, 2, order) * lambert_sum(1, 2, order);
}

QSeries f3(int order)
{
	return poch_infinite_u(-1, 1, 2, order) * lambert_sum(2, 2, order);
}

QSeries f_m(int m)
{
	if (m < 1)
		throw std::invalid_argument("f_m: m must be >= 1");
	switch (m) {
	case 1:
		return QSeries::from_coefficients({0, -1, 1, 0, -1, 2, -1});
	case 2:
		return QSeries::from_coefficients({0, 0, 0, -1});
	case 3: {
		QSeries s(15);
		s.set_coeff(5, -1);
		s.set_coeff(7, 1);
		s.set_coeff(8, -1);
		s.set_coeff(9, 1);
		s.set_coeff(10, 2);
		s.set_coeff(13, 1);
		s.set_coeff(15, -1);
		return s;
	}
	default: {
		QSeries s(2 * m + 4);
		s.set_coeff(2 * m - 1, -1);
		s.set_coeff(2 * m + 1, 1);
		s.set_coeff(2 * m + 2, -1);
		s.set_coeff(2 * m + 3, 1);
		s.set_coeff(2 * m + 4, 1);
		return s;
	}
	}
}

int g_m_expected_low(int m)
{
	switch (m) {
	case 1:
		return 7;
	case 2:
		return 5;
	case 3:
		return 16;
	default:
		return 2 * m + 6;
	}
}

QSeries g_m(int m, int order)
{
	if (m < 1)
		throw std::invalid_argument("g_m: m must be >= 1");
	if (order < 2 * m + 6)
		throw std::invalid_argument("g_m: order must be at least 2m+6");
	/* (q^4 + q - 1) q^(2m-1) prod_{l>=1, l != m} (1 + q^(2l-1)). */
	QSeries p = QSeries::one(order);
	for (int l = 1; 2 * l - 1 <= order; ++l)
		if (l != m)
			p.mul_binomial(1, 2 * l - 1);
	QSeries lhs(order);
	lhs -= p.shifted(2 * m - 1);
	lhs += p.shifted(2 * m);
	lhs += p.shifted(2 * m + 3);
	const QSeries f = f_m(m);
	for (int n = 0; n <= std::min(order, f.order()); ++n)
		lhs.add_coeff(n, -f.coeff(n));
	return lhs;
}

QSeries c_series(int order)
{
	QSeries s(order);
	for (long k = 0; k * k + k <= order; ++k) {
		const int rem = order - static_cast<int>(k * k + k);
		const QSeries base = inv_poch_finite_u(1, 1, 2, static_cast<int>(k) + 1, rem);
		QSeries paren(rem);
		for (long j = 0; j <= k; ++j) {
			const int e = static_cast<int>(2 * j + 1);
			if (e > rem)
				break;
			/* q^e / (1 - q^e) */
			QSeries geo = QSeries::one(rem);
			geo.div_binomial(-1, e);
			paren = add_shifted(paren, geo, e);
		}
		paren.add_coeff(0, -1);
		s = add_shifted(s, base * paren, static_cast<int>(k * k + k));
	}
	return s;
}

int e_of_n(long long n)
{
	for (long long j = 0; 3 * j * j + 2 * j <= n; ++j)
		if (3 * j * j + 2 * j == n)
			return 1;
	for (long long j = 0; 3 * j * j + 4 * j + 1 <= n; ++j)
		if (3 * j * j + 4 * j + 1 == n)
			return -1;
	return 0;
}

bool is_eight_times_gen_pentagonal(long long n)
{
	if (n < 0 || n % 8 != 0)
		return false;
	const long long g = n / 8;
	for (long long j = 0; j * (3 * j - 1) / 2 <= g; ++j)
		if (j * (3 * j - 1) / 2 == g || j * (3 * j + 1) / 2 == g)
			return true;
	return false;
}

const std::vector<SeriesCatalogEntry>& series_catalog()
{
	static const std::vector<SeriesCatalogEntry> catalog = {
		{"omega", "third-order mock theta omega(q)", omega},
		{"a_omega", "q*omega(q); consecutive-pair partitions", a_omega},
		{"b_omega", "partitions with odd parts below twice the smallest", b_omega},
		{"a_omega2", "odd Ferrers diagrams by size", a_omega2},
		{"a_omega2_tilde", "odd Ferrers diagrams, column form", a_omega2_tilde},
		{"nu_neg", "nu(-q)", nu_neg},
		{"a_nu", "nu(-q) via the bivariate route", a_nu},
		{"a_nu2", "odd Ferrers diagrams with distinct rows", a_nu2},
		{"b_nu", "distinct parts, odd parts below twice the smallest, zero allowed",
		 b_nu},
		{"phi", "third-order mock theta phi(q)", phi},
		{"phi_alt", "phi(q), alternating Eulerian form", phi_alternating},
		{"b_phi", "B_phi(z;q) at z = 1", [](int n) { return eval_z(b_phi_z(n), 1); }},
		{"a_phi", "A_phi(z;q) at z = 1", [](int n) { return eval_z(a_phi_z(n), 1); }},
		{"d_phi", "D_phi(z;q) at z = 1", [](int n) { return d_phi_at(1, n); }},
		{"theta_squares", "sum of q^(n^2), n >= 1", theta_squares},
		{"f1", "F1(q)", f1},
		{"f2", "F2(q); total parts over distinct-odd partitions", f2},
		{"f3", "F3(q)", f3},
		{"c_series", "excess series c(n) for the nu families", c_series},
	};
	return catalog;
}

const SeriesCatalogEntry* find_series(const std::string& name)
{
	for (const auto& entry : series_catalog())
		if (entry.name == name)
			return &entry;
	return nullptr;
}

const std::vector<BivariateCatalogEntry>& bivariate_catalog()
{
	static const std::vector<BivariateCatalogEntry> catalog = {
		{"a_omega_z", "parts statistic over the omega-A family", a_omega_z},
		{"b_omega_z", "parts statistic over the omega-B family", b_omega_z},
		{"a_omega2_z", "row statistic over odd Ferrers diagrams", a_omega2_z},
		{"a_omega2_tilde_z", "column statistic over odd Ferrers diagrams",
		 a_omega2_tilde_z},
		{"a_nu_z", "parts statistic over the nu-A family", a_nu_z},
		{"a_nu2_z", "row statistic over distinct odd Ferrers diagrams", a_nu2_z},
		{"b_nu_z", "parts statistic over the nu-B family", b_nu_z},
		{"b_phi_z", "signed distinct-odd refinement of phi", b_phi_z},
		{"a_phi_z", "parts statistic, distinct parts with bounded evens", a_phi_z},
	};
	return catalog;
}

}  // namespace mockparts
