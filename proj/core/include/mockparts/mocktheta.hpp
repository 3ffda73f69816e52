#pragma once

#include "mockparts/bivariate.hpp"

#include <functional>
#include <vector>

namespace mockparts {

/* Builders for the third-order mock theta generating functions and their
 * companions. Each builder expands the defining q-hypergeometric sum or
 * product exactly to the requested truncation order; infinite k-sums are
 * cut at the first index whose minimal q-exponent exceeds the order.
 */

/* omega(q) = sum_{k>=0} q^(2k(k+1)) / (q;q^2)_{k+1}^2. */
QSeries omega(int order);

/* A_omega(q) = q*omega(q) = sum_{k>=1} q^k / (q;q^2)_k. Counts partitions
 * whose parts, except one instance of the largest, form pairs of
 * consecutive non-negative integers. */
QSeries a_omega(int order);

/* B_omega(q) = sum_{k>=1} q^k / ((q^k;q)_{k+1} (q^(2k+2);q^2)_inf).
 * Counts partitions whose odd parts are all less than twice the smallest
 * part. */
QSeries b_omega(int order);

/* Odd Ferrers diagram count, sum_{k>=1} q^k / (q;q^2)_k evaluated through
 * the bivariate row generating function at z = 1. */
QSeries a_omega2(int order);
QSeries a_omega2_tilde(int order);

/* Bivariate refinements; the z-exponent tracks parts / rows / columns. */
BivariateSeries a_omega_z(int order);       /* sum zq^k / ((1-zq)(z^2q^3;q^2)_{k-1}) */
BivariateSeries b_omega_z(int order);       /* sum zq^k / ((zq^k;q)_{k+1}(zq^(2k+2);q^2)_inf) */
BivariateSeries a_omega2_z(int order);      /* sum zq^k / (zq;q^2)_k        (rows) */
BivariateSeries a_omega2_tilde_z(int order);/* sum z^k q^k / (q;q^2)_k      (columns) */

/* nu(-q) = sum_{k>=0} q^(k(k+1)) / (q;q^2)_{k+1}. */
QSeries nu_neg(int order);
QSeries a_nu(int order);   /* z = 1 evaluation of the bivariate route */
QSeries a_nu2(int order);  /* sum_{k>=0} (-q;q^2)_k q^k */
QSeries b_nu(int order);   /* sum_{k>=0} q^k (-q^(k+1);q)_k (-q^(2k+2);q^2)_inf */

BivariateSeries a_nu_z(int order);   /* sum z^k q^(k^2+k) / (zq;q^2)_{k+1} */
BivariateSeries a_nu2_z(int order);  /* sum (-zq;q^2)_k z q^k */
BivariateSeries b_nu_z(int order);   /* sum zq^k (-zq^(k+1);q)_k (-zq^(2k+2);q^2)_inf */

/* phi(q) = sum_{n>=0} q^(n^2) / (-q^2;q^2)_n. */
QSeries phi(int order);

/* Alternating form 1 + sum_{n>=0} (-1)^n q^(2n+1) (q;q^2)_n. */
QSeries phi_alternating(int order);

BivariateSeries b_phi_z(int order);  /* 1 + sum z^n q^(2n+1) (q;q^2)_n */
BivariateSeries a_phi_z(int order);  /* q sum zq^n (-zq^(n+1);q)_n (-zq^(2n+1);q^2)_inf */

/* D_phi(z;q) = 1 - z(-zq;q^2)_inf
 *            + z (-q;q)_inf / (-q^2/z;q^2)_inf * (1 + sum (z^n + z^-n) q^(n^2))
 * evaluated at z0 in {1, -1}. The z^-n pieces bar a direct bivariate
 * expansion, but both evaluations are exact univariate computations:
 * at z0 the Jacobi-triple-product factor is 1 + 2*sum z0^n q^(n^2). */
QSeries d_phi_at(int z0, int order);

/* Same evaluation through the first displayed shape of D_phi,
 * 1 + z(-zq;q^2)_inf (-1 + (-q;q)_inf (q^2;q^2)_inf (-q/z;q^2)_inf
 *                          / (-q^2/z;q^2)_inf),
 * kept separate so the triple-product rewrite is checkable. */
QSeries d_phi_product_form_at(int z0, int order);

/* theta = sum_{n>=1} q^(n^2). */
QSeries theta_squares(int order);

QSeries f1(int order);  /* F3 (1 + 2 theta) + 2 (-q;q^2)_inf theta */
QSeries f2(int order);  /* (-q;q^2)_inf sum_{m>=1} q^(2m-1) / (1+q^(2m-1)) */
QSeries f3(int order);  /* (-q;q^2)_inf sum_{m>=1} q^(2m)   / (1+q^(2m)) */

/* The exact low-order polynomial f_m in the decomposition
 * (q^4+q-1) q^(2m-1) prod_{l != m} (1+q^(2l-1)) = f_m + g_m. */
QSeries f_m(int m);

/* g_m = left side minus f_m, truncated at the given order. */
QSeries g_m(int m, int order);

/* Expected vanishing order of g_m per branch: 7, 5, 16, then 2m+6. */
int g_m_expected_low(int m);

/* c(n) series: sum_k q^(k^2+k)/(q;q^2)_{k+1} ((sum_{j=0..k} q^(2j+1)/(1-q^(2j+1))) - 1).
 * Tracks the excess of parts between the nu-A and nu-B families. */
QSeries c_series(int order);

/* e(n) = 1 when n = 3j^2+2j, -1 when n = 3j^2+4j+1 (j >= 0), else 0. */
int e_of_n(long long n);

/* Whether n is eight times a generalized pentagonal number j(3j+-1)/2. */
bool is_eight_times_gen_pentagonal(long long n);

/* Catalog of the univariate series exposed by name through the CLI. */
struct SeriesCatalogEntry {
	std::string name;
	std::string description;
	std::function<QSeries(int)> build;
};

const std::vector<SeriesCatalogEntry>& series_catalog();
const SeriesCatalogEntry* find_series(const std::string& name);

/* Bivariate registry used by the verification engine. */
struct BivariateCatalogEntry {
	std::string name;
	std::string description;
	std::function<BivariateSeries(int)> build;
};

const std::vector<BivariateCatalogEntry>& bivariate_catalog();

}  // namespace mockparts
