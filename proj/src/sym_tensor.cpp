#include "liestar/sym_tensor.hpp"

#include <cmath>

namespace liestar {

std::vector<double> l1_proj_norm(const SymTensor& p, std::complex<double> hbar)
{
	std::vector<double> norms(static_cast<std::size_t>(p.max_degree()) + 1, 0.0);
	for (const auto& [m, c] : p.terms())
		norms[degree(m)] += std::abs(c.eval(hbar));
	return norms;
}

double seminorm_Rc(const SymTensor& p, double R, double c, std::complex<double> hbar)
{
	double acc = 0.0;
	std::vector<double> norms = l1_proj_norm(p, hbar);
	for (std::size_t k = 0; k < norms.size(); ++k) {
		if (norms[k] == 0.0)
			continue;
		double weight = std::pow(c, double(k)) * std::exp(R * std::lgamma(double(k) + 1.0));
		acc += weight * norms[k];
	}
	return acc;
}

std::function<GaussianRational(const AlgebraElement&)>
homogeneous_evaluator(const SymTensor& p, int k)
{
	SymTensor part = p.homogeneous_part(k);
	return [part, k](const AlgebraElement& v) -> GaussianRational {
		GaussianRational acc;
		for (const auto& [m, c] : part.terms()) {
			GaussianRational mono(1);
			for (std::size_t i = 0; i < m.size(); ++i)
				for (int e = 0; e < m[i]; ++e)
					mono *= v.coords.at(i);
			acc += c.coeff(0) * mono;
		}
		return acc;
	};
}

} // namespace liestar
