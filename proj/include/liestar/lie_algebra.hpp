#ifndef LIESTAR_LIE_ALGEBRA_HPP
#define LIESTAR_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "liestar/errors.hpp"
#include "liestar/rational.hpp"

namespace liestar {

/// Finite dimensional Lie algebra given by rational structure constants in a
/// fixed basis: [e_i, e_j] = sum_k c[i][j][k] e_k (all indices 0-based here;
/// the JSON interface is 1-based).
class LieAlgebraSpec
{
  public:
	LieAlgebraSpec(std::string name, std::vector<std::string> names,
	               std::vector<Rational> c)
	    : name_(std::move(name)), names_(std::move(names)), c_(std::move(c))
	{
		n_ = static_cast<int>(names_.size());
		if (n_ < 1 || c_.size() != static_cast<std::size_t>(n_) * n_ * n_)
			throw Error("structure constant array must have shape n x n x n, n >= 1");
		fingerprint_ = std::to_string(n_);
		for (const auto& r : c_)
			fingerprint_ += "," + r.get_str();
	}

	int dim() const { return n_; }
	const std::string& name() const { return name_; }
	const std::vector<std::string>& basis_names() const { return names_; }

	const Rational& c(int i, int j, int k) const
	{
		return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
	}

	int basis_index(const std::string& label) const
	{
		for (int i = 0; i < n_; ++i)
			if (names_[i] == label)
				return i;
		return -1;
	}

	bool operator==(const LieAlgebraSpec& o) const
	{
		return n_ == o.n_ && c_ == o.c_;
	}

	/// Stable key identifying the structure constants; used by caches.
	const std::string& fingerprint() const { return fingerprint_; }

  private:
	std::string name_;
	std::vector<std::string> names_;
	std::vector<Rational> c_; // row-major (i, j, k)
	std::string fingerprint_;
	int n_ = 0;
};

/// Element of the complexified Lie algebra in the fixed basis.
struct AlgebraElement
{
	std::vector<GaussianRational> coords;

	static AlgebraElement basis(int n, int i)
	{
		AlgebraElement v;
		v.coords.assign(n, GaussianRational());
		v.coords[i] = GaussianRational(1);
		return v;
	}
};

/// Checks antisymmetry and the Jacobi identity; returns the spec unchanged on
/// success and throws naming the first failing index tuple otherwise.
/// Reported indices are 1-based to match the JSON interface.
inline const LieAlgebraSpec& validate_algebra(const LieAlgebraSpec& spec)
{
	const int n = spec.dim();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				if (spec.c(i, j, k) != -spec.c(j, i, k))
					throw AntisymmetryViolation(i + 1, j + 1, k + 1);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l) {
					Rational s(0);
					for (int m = 0; m < n; ++m)
						s += spec.c(i, j, m) * spec.c(m, k, l) +
						     spec.c(j, k, m) * spec.c(m, i, l) +
						     spec.c(k, i, m) * spec.c(m, j, l);
					if (s != 0)
						throw JacobiViolation(i + 1, j + 1, k + 1, l + 1);
				}
	return spec;
}

/// [xi, chi] by bilinear contraction with the structure constants.
inline AlgebraElement bracket(const LieAlgebraSpec& spec, const AlgebraElement& xi,
                              const AlgebraElement& chi)
{
	const int n = spec.dim();
	if (xi.coords.size() != static_cast<std::size_t>(n) ||
	    chi.coords.size() != static_cast<std::size_t>(n))
		throw DimensionMismatch();
	AlgebraElement out;
	out.coords.assign(n, GaussianRational());
	for (int i = 0; i < n; ++i) {
		if (xi.coords[i].is_zero())
			continue;
		for (int j = 0; j < n; ++j) {
			if (chi.coords[j].is_zero())
				continue;
			GaussianRational prod = xi.coords[i] * chi.coords[j];
			for (int k = 0; k < n; ++k) {
				const Rational& ck = spec.c(i, j, k);
				if (ck != 0)
					out.coords[k] += prod * GaussianRational(ck);
			}
		}
	}
	return out;
}

/// Built-in catalog: abelian(n), heisenberg, sl2, so3, axb.
/// Every returned spec has passed validate_algebra.
LieAlgebraSpec catalog(const std::string& name);

/// JSON (de)serialization following the documented schema:
/// {"dim": n, "names": [...], "brackets": [{"i": i, "j": j, "coeffs": {"k": "p/q"}}]}
/// with 1-based indices, i < j only, antisymmetric completion implied.
LieAlgebraSpec algebra_from_json(const std::string& json_text);
std::string algebra_to_json(const LieAlgebraSpec& spec);

} // namespace liestar

#endif
