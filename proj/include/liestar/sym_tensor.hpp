#ifndef LIESTAR_SYM_TENSOR_HPP
#define LIESTAR_SYM_TENSOR_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "liestar/errors.hpp"
#include "liestar/hbar.hpp"
#include "liestar/lie_algebra.hpp"

namespace liestar {

/// Finite sequence of basis indices (0-based), i.e. a basis word of the
/// tensor algebra. Length = tensor degree.
using Word = std::vector<int>;

/// Exponent vector of a symmetric basis monomial; length = dim.
using SymMonomial = std::vector<int>;

inline int degree(const SymMonomial& m)
{
	return std::accumulate(m.begin(), m.end(), 0);
}

inline SymMonomial word_content(const Word& w, int n)
{
	SymMonomial m(n, 0);
	for (int letter : w)
		++m[letter];
	return m;
}

/// Ordered word e_1^{a_1} ... e_n^{a_n} spelled out letter by letter.
inline Word monomial_word(const SymMonomial& m)
{
	Word w;
	for (int i = 0; i < static_cast<int>(m.size()); ++i)
		w.insert(w.end(), m[i], i);
	return w;
}

/// Element of Sym(g_C) with coefficients in Q(i)[hbar]: sparse map from
/// exponent vectors to scalars, no stored zeros.
class SymTensor
{
  public:
	using Terms = std::map<SymMonomial, HbarScalar>;

	SymTensor() = default;
	explicit SymTensor(int dim) : n_(dim) {}

	static SymTensor scalar(int dim, HbarScalar c)
	{
		SymTensor t(dim);
		t.add_term(SymMonomial(dim, 0), std::move(c));
		return t;
	}
	static SymTensor one(int dim) { return scalar(dim, HbarScalar(1)); }
	static SymTensor basis(int dim, int i)
	{
		SymTensor t(dim);
		SymMonomial m(dim, 0);
		m[i] = 1;
		t.add_term(m, HbarScalar(1));
		return t;
	}
	static SymTensor monomial(int dim, SymMonomial m, HbarScalar c = HbarScalar(1))
	{
		SymTensor t(dim);
		t.add_term(std::move(m), std::move(c));
		return t;
	}
	static SymTensor linear(const AlgebraElement& xi)
	{
		SymTensor t(static_cast<int>(xi.coords.size()));
		for (int i = 0; i < t.dim(); ++i)
			if (!xi.coords[i].is_zero()) {
				SymMonomial m(t.dim(), 0);
				m[i] = 1;
				t.add_term(m, HbarScalar(xi.coords[i]));
			}
		return t;
	}

	int dim() const { return n_; }
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Largest total degree among stored terms (0 for the zero tensor).
	int max_degree() const
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

	SymTensor& operator+=(const SymTensor& o)
	{
		check_same(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}
	SymTensor& operator-=(const SymTensor& o)
	{
		check_same(o);
		for (const auto& [m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}
	SymTensor& operator*=(const HbarScalar& s)
	{
		if (s.is_zero()) {
			terms_.clear();
			return *this;
		}
		for (auto& [m, c] : terms_)
			c *= s;
		return *this;
	}

	friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
	friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
	friend SymTensor operator*(SymTensor a, const HbarScalar& s) { return a *= s; }
	friend SymTensor operator*(const HbarScalar& s, SymTensor a) { return a *= s; }

	friend bool operator==(const SymTensor& a, const SymTensor& b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

	/// Degree-k homogeneous part.
	SymTensor homogeneous_part(int k) const
	{
		SymTensor out(n_);
		for (const auto& [m, c] : terms_)
			if (degree(m) == k)
				out.add_term(m, c);
		return out;
	}

	void check_same(const SymTensor& o) const
	{
		if (n_ != o.n_)
			throw AlgebraMismatch();
	}

  private:
	Terms terms_;
	int n_ = 0;
};

/// Element of the tensor algebra T(g_C) before symmetrization: sparse map
/// from words to scalars.
class TensorWordExpr
{
  public:
	using Terms = std::map<Word, HbarScalar>;

	explicit TensorWordExpr(int dim) : n_(dim) {}

	static TensorWordExpr word(int dim, Word w, HbarScalar c = HbarScalar(1))
	{
		TensorWordExpr t(dim);
		t.add_term(std::move(w), std::move(c));
		return t;
	}

	int dim() const { return n_; }
	const Terms& terms() const { return terms_; }

	void add_term(Word w, HbarScalar c)
	{
		if (c.is_zero())
			return;
		auto it = terms_.find(w);
		if (it == terms_.end()) {
			terms_.emplace(std::move(w), std::move(c));
		} else {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

  private:
	Terms terms_;
	int n_ = 0;
};

/// Image of the projector (1/k!) sum over S_k on each homogeneous degree,
/// expressed in monomial exponents. A word contributes its content monomial
/// with unchanged coefficient: all k! permutations land in the same class and
/// the weights 1/k! sum to one.
inline SymTensor symmetrize(const TensorWordExpr& t)
{
	SymTensor out(t.dim());
	for (const auto& [w, c] : t.terms())
		out.add_term(word_content(w, t.dim()), c);
	return out;
}

/// Canonical inclusion Sym(g) -> T(g) sending a monomial class to the
/// average of its words. Test helper for the projection property.
inline TensorWordExpr include_in_tensor(const SymTensor& p);

/// Commutative product: exponent addition with coefficient multiplication.
inline SymTensor sym_product(const SymTensor& p, const SymTensor& q)
{
	p.check_same(q);
	SymTensor out(p.dim());
	for (const auto& [mp, cp] : p.terms())
		for (const auto& [mq, cq] : q.terms()) {
			SymMonomial m(p.dim());
			for (int i = 0; i < p.dim(); ++i)
				m[i] = mp[i] + mq[i];
			out.add_term(std::move(m), cp * cq);
		}
	return out;
}

/// Polarization: recovers the symmetric k-linear form of a k-homogeneous
/// evaluator P via the signed-sum identity
///   L_s(v_1..v_k) = (2^k k!)^{-1} sum_{eps = +-1} eps_1...eps_k P(sum eps_j v_j).
/// Garbage in, garbage out if P is not k-homogeneous.
template <typename Scalar, typename Vec>
Scalar polarize(const std::function<Scalar(const Vec&)>& P, const std::vector<Vec>& vs)
{
	const int k = static_cast<int>(vs.size());
	if (k == 0)
		return P(Vec{});
	Scalar acc{};
	const std::uint64_t combos = std::uint64_t(1) << k;
	for (std::uint64_t bits = 0; bits < combos; ++bits) {
		Vec sum = vs[0];
		bool neg0 = bits & 1;
		int parity = neg0 ? 1 : 0;
		if (neg0)
			for (auto& x : sum.coords)
				x = -x;
		for (int j = 1; j < k; ++j) {
			bool neg = (bits >> j) & 1;
			parity ^= neg ? 1 : 0;
			for (std::size_t i = 0; i < sum.coords.size(); ++i)
				sum.coords[i] += neg ? -vs[j].coords[i] : vs[j].coords[i];
		}
		Scalar val = P(sum);
		acc += parity ? -val : val;
	}
	Scalar denom = Scalar(1);
	for (int j = 1; j <= k; ++j)
		denom *= Scalar(2 * j); // 2^k * k!
	return acc / denom;
}

/// Evaluator of the degree-k homogeneous part of an hbar-free tensor, for use
/// with polarize. Coefficients must be hbar-free.
std::function<GaussianRational(const AlgebraElement&)>
homogeneous_evaluator(const SymTensor& p, int k);

/// Per-degree ell^1 projective tensor norms at a fixed complex hbar: each
/// degree-k basis monomial has projective norm exactly one, so the norm of
/// the degree-k part is the sum of coefficient moduli. Returns entries for
/// degrees 0..max_degree.
std::vector<double> l1_proj_norm(const SymTensor& p, std::complex<double> hbar);

/// R-topology seminorm p_{R,c}: sum_k c^k (k!)^R * (degree-k ell^1 norm).
double seminorm_Rc(const SymTensor& p, double R, double c, std::complex<double> hbar);

inline TensorWordExpr include_in_tensor(const SymTensor& p)
{
	TensorWordExpr out(p.dim());
	std::function<void(Word&, SymMonomial&, const HbarScalar&)> emit =
	    [&](Word& prefix, SymMonomial& left, const HbarScalar& w) {
		    int k = degree(left);
		    if (k == 0) {
			    out.add_term(prefix, w);
			    return;
		    }
		    for (int i = 0; i < static_cast<int>(left.size()); ++i) {
			    if (left[i] == 0)
				    continue;
			    // weight letters by remaining multiplicity / remaining length
			    HbarScalar wi = w * HbarScalar(Rational(left[i], k));
			    prefix.push_back(i);
			    --left[i];
			    emit(prefix, left, wi);
			    ++left[i];
			    prefix.pop_back();
		    }
	    };
	for (const auto& [m, c] : p.terms()) {
		Word prefix;
		SymMonomial left = m;
		emit(prefix, left, c);
	}
	return out;
}

} // namespace liestar

#endif
