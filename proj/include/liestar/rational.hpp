#ifndef LIESTAR_RATIONAL_HPP
#define LIESTAR_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liestar {

/// Exact rational scalar. GMP keeps values in lowest terms with positive
/// denominator, which is the canonical form assumed everywhere below.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s)
{
	std::size_t slash = s.find('/');
	mpq_class q;
	if (slash == std::string::npos)
		q = mpq_class(mpz_class(s));
	else
		q = mpq_class(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
	q.canonicalize();
	return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational
{
	Rational re;
	Rational im;

	GaussianRational() : re(0), im(0) {}
	GaussianRational(long n) : re(n), im(0) {}
	GaussianRational(Rational r) : re(std::move(r)), im(0) {}
	GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

	static GaussianRational i() { return {Rational(0), Rational(1)}; }

	bool is_zero() const { return re == 0 && im == 0; }

	GaussianRational conj() const { return {re, -im}; }

	std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

	GaussianRational& operator+=(const GaussianRational& o)
	{
		re += o.re;
		im += o.im;
		return *this;
	}
	GaussianRational& operator-=(const GaussianRational& o)
	{
		re -= o.re;
		im -= o.im;
		return *this;
	}
	GaussianRational& operator*=(const GaussianRational& o)
	{
		Rational r = re * o.re - im * o.im;
		im = re * o.im + im * o.re;
		re = std::move(r);
		return *this;
	}

	friend GaussianRational operator+(GaussianRational a, const GaussianRational& b)
	{
		return a += b;
	}
	friend GaussianRational operator-(GaussianRational a, const GaussianRational& b)
	{
		return a -= b;
	}
	friend GaussianRational operator-(const GaussianRational& a)
	{
		return {-a.re, -a.im};
	}
	friend GaussianRational operator*(GaussianRational a, const GaussianRational& b)
	{
		return a *= b;
	}
	friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
	{
		if (b.is_zero())
			throw std::domain_error("GaussianRational: division by zero");
		Rational n = b.re * b.re + b.im * b.im;
		return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
	}
	GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

	friend bool operator==(const GaussianRational& a, const GaussianRational& b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend bool operator!=(const GaussianRational& a, const GaussianRational& b)
	{
		return !(a == b);
	}
};

inline std::string to_string(const GaussianRational& z)
{
	if (z.im == 0)
		return z.re.get_str();
	if (z.re == 0)
		return z.im.get_str() + "i";
	std::string s = z.re.get_str();
	if (z.im > 0)
		s += "+";
	return s + z.im.get_str() + "i";
}

inline Rational factorial(unsigned n)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k)
{
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rational(b);
}

} // namespace liestar

#endif
