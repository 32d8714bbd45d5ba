#ifndef LIESTAR_PBW_HPP
#define LIESTAR_PBW_HPP

#include "liestar/sym_tensor.hpp"

namespace liestar {

/// Element of U(g_C) in the increasing-index PBW basis: sparse map from
/// exponent vectors a (meaning the ordered monomial e_1^{a_1} ... e_n^{a_n})
/// to scalars in Q(i)[hbar].
class PBWElement
{
  public:
	using Terms = std::map<SymMonomial, HbarScalar>;

	PBWElement() = default;
	explicit PBWElement(int dim) : n_(dim) {}

	static PBWElement scalar(int dim, HbarScalar c)
	{
		PBWElement u(dim);
		u.add_term(SymMonomial(dim, 0), std::move(c));
		return u;
	}
	static PBWElement one(int dim) { return scalar(dim, HbarScalar(1)); }
	static PBWElement monomial(int dim, SymMonomial m, HbarScalar c = HbarScalar(1))
	{
		PBWElement u(dim);
		u.add_term(std::move(m), std::move(c));
		return u;
	}

	int dim() const { return n_; }
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Filtration degree: max total exponent over terms (0 when zero).
	int filtration_degree() const
	{
		int d = 0;
		for (const auto& [m, c] : terms_)
			d = std::max(d, degree(m));
		return d;
	}

	void add_term(SymMonomial m, HbarScalar c)
	{
		if (c.is_zero())
			return;
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(std::move(m), std::move(c));
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	PBWElement& operator+=(const PBWElement& o)
	{
		check_same(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}
	PBWElement& operator-=(const PBWElement& o)
	{
		check_same(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}
	PBWElement& operator*=(const HbarScalar& s)
	{
		if (s.is_zero()) {
			terms_.clear();
			return *this;
		}
		for (auto& [m, c] : terms_)
			c *= s;
		return *this;
	}

	friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
	friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
	friend PBWElement operator*(PBWElement a, const HbarScalar& s) { return a *= s; }

	friend bool operator==(const PBWElement& a, const PBWElement& b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

	void check_same(const PBWElement& o) const
	{
		if (n_ != o.n_)
			throw AlgebraMismatch();
	}

  private:
	Terms terms_;
	int n_ = 0;
};

/// Rewrites adjacent descending pairs e_j e_i (j > i) via
/// e_j e_i = e_i e_j + [e_j, e_i] until every term is nondecreasing.
/// Coefficients stay hbar-free; results are memoized per algebra.
PBWElement normal_order(const LieAlgebraSpec& spec, const Word& w);

/// Product in U(g): concatenate ordered monomials as words, normal order,
/// combine. Associative and unital.
PBWElement pbw_multiply(const LieAlgebraSpec& spec, const PBWElement& u,
                        const PBWElement& v);

/// The PBW symmetrization omega (hbar-free): a degree-k monomial maps to
/// (1/k!) times the sum of normal_order over all k! words of its content,
/// folded over distinct words with exact multinomial weights.
PBWElement pbw_symmetrize(const LieAlgebraSpec& spec, const SymTensor& p);

/// Inverse of omega by subtract-and-recurse on the leading symbol: the top
/// filtration part of u is read off as a symmetric polynomial, omega of it is
/// subtracted, and the remainder has strictly smaller degree.
SymTensor pbw_desymmetrize(const LieAlgebraSpec& spec, const PBWElement& u);

} // namespace liestar

#endif
