#ifndef LIESTAR_HBAR_HPP
#define LIESTAR_HBAR_HPP

#include <complex>
#include <vector>

#include "liestar/rational.hpp"

namespace liestar {

/// Polynomial in the formal deformation parameter hbar with coefficients in
/// Q(i). Canonical form: the highest stored coefficient is nonzero, so the
/// zero polynomial has an empty coefficient vector.
class HbarScalar
{
  public:
	HbarScalar() = default;
	HbarScalar(long n) { set_coeff(0, GaussianRational(n)); }
	HbarScalar(GaussianRational c) { set_coeff(0, std::move(c)); }
	HbarScalar(Rational r) { set_coeff(0, GaussianRational(std::move(r))); }

	/// c * hbar^k
	static HbarScalar monomial(GaussianRational c, unsigned k)
	{
		HbarScalar s;
		s.set_coeff(k, std::move(c));
		return s;
	}
	static HbarScalar hbar() { return monomial(GaussianRational(1), 1); }
	/// The exact prefactor hbar/i = (-i)*hbar of the quantization map.
	static HbarScalar hbar_over_i()
	{
		return monomial(GaussianRational(Rational(0), Rational(-1)), 1);
	}

	bool is_zero() const { return coeffs_.empty(); }
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

	GaussianRational coeff(unsigned k) const
	{
		return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
	}

	void set_coeff(unsigned k, GaussianRational c)
	{
		if (k >= coeffs_.size()) {
			if (c.is_zero())
				return;
			coeffs_.resize(k + 1);
		}
		coeffs_[k] = std::move(c);
		trim();
	}

	const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

	HbarScalar& operator+=(const HbarScalar& o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size());
		for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
			coeffs_[k] += o.coeffs_[k];
		trim();
		return *this;
	}
	HbarScalar& operator-=(const HbarScalar& o)
	{
		if (o.coeffs_.size() > coeffs_.size())
			coeffs_.resize(o.coeffs_.size());
		for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
			coeffs_[k] -= o.coeffs_[k];
		trim();
		return *this;
	}
	HbarScalar& operator*=(const HbarScalar& o) { return *this = *this * o; }

	friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
	friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
	friend HbarScalar operator-(const HbarScalar& a)
	{
		HbarScalar r = a;
		for (auto& c : r.coeffs_)
			c = -c;
		return r;
	}
	friend HbarScalar operator*(const HbarScalar& a, const HbarScalar& b)
	{
		HbarScalar r;
		if (a.is_zero() || b.is_zero())
			return r;
		r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational());
		for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
			for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
				r.coeffs_[j + k] += a.coeffs_[j] * b.coeffs_[k];
		r.trim();
		return r;
	}

	friend bool operator==(const HbarScalar& a, const HbarScalar& b)
	{
		return a.coeffs_ == b.coeffs_;
	}
	friend bool operator!=(const HbarScalar& a, const HbarScalar& b) { return !(a == b); }

	/// Polynomial evaluation at a fixed complex hbar; a ring morphism.
	std::complex<double> eval(std::complex<double> hbar_value) const
	{
		std::complex<double> acc(0.0, 0.0);
		for (std::size_t k = coeffs_.size(); k-- > 0;)
			acc = acc * hbar_value + coeffs_[k].to_complex();
		return acc;
	}

	/// Coefficient of hbar^j as an hbar-free scalar.
	HbarScalar hbar_coefficient(unsigned j) const { return HbarScalar(coeff(j)); }

	/// d/dhbar evaluated at hbar = 0, i.e. the linear coefficient.
	GaussianRational derivative_at_zero() const { return coeff(1); }

  private:
	void trim()
	{
		while (!coeffs_.empty() && coeffs_.back().is_zero())
			coeffs_.pop_back();
	}

	std::vector<GaussianRational> coeffs_;
};

inline std::complex<double> hbar_eval(const HbarScalar& s, std::complex<double> h)
{
	return s.eval(h);
}

inline std::string to_string(const HbarScalar& s)
{
	if (s.is_zero())
		return "0";
	std::string out;
	for (int k = 0; k <= s.degree(); ++k) {
		GaussianRational c = s.coeff(k);
		if (c.is_zero())
			continue;
		if (!out.empty())
			out += " + ";
		out += "(" + to_string(c) + ")";
		if (k == 1)
			out += "*hbar";
		else if (k > 1)
			out += "*hbar^" + std::to_string(k);
	}
	return out;
}

} // namespace liestar

#endif
