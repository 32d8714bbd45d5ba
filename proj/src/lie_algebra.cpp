#include "liestar/lie_algebra.hpp"

#include <nlohmann/json.hpp>

namespace liestar {

namespace {

std::vector<Rational> zero_constants(int n)
{
	return std::vector<Rational>(static_cast<std::size_t>(n) * n * n, Rational(0));
}

void set_bracket(std::vector<Rational>& c, int n, int i, int j, int k, Rational v)
{
	c[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
	c[(static_cast<std::size_t>(j) * n + i) * n + k] = -v;
}

} // namespace

LieAlgebraSpec catalog(const std::string& name)
{
	// abelian(n): zero bracket in any dimension
	if (name.rfind("abelian(", 0) == 0 && name.back() == ')') {
		int n = std::stoi(name.substr(8, name.size() - 9));
		if (n < 1)
			throw UnknownAlgebra(name);
		std::vector<std::string> names;
		for (int i = 1; i <= n; ++i)
			names.push_back("e" + std::to_string(i));
		LieAlgebraSpec spec(name, names, zero_constants(n));
		return validate_algebra(spec), spec;
	}
	if (name == "heisenberg") {
		// basis (q, p, c) with [q, p] = c
		auto c = zero_constants(3);
		set_bracket(c, 3, 0, 1, 2, Rational(1));
		LieAlgebraSpec spec(name, {"q", "p", "c"}, std::move(c));
		return validate_algebra(spec), spec;
	}
	if (name == "sl2") {
		// basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h
		auto c = zero_constants(3);
		set_bracket(c, 3, 0, 1, 1, Rational(2));
		set_bracket(c, 3, 0, 2, 2, Rational(-2));
		set_bracket(c, 3, 1, 2, 0, Rational(1));
		LieAlgebraSpec spec(name, {"h", "e", "f"}, std::move(c));
		return validate_algebra(spec), spec;
	}
	if (name == "so3") {
		// basis (l1, l2, l3) with [l1,l2] = l3 cyclic
		auto c = zero_constants(3);
		set_bracket(c, 3, 0, 1, 2, Rational(1));
		set_bracket(c, 3, 1, 2, 0, Rational(1));
		set_bracket(c, 3, 2, 0, 1, Rational(1));
		LieAlgebraSpec spec(name, {"l1", "l2", "l3"}, std::move(c));
		return validate_algebra(spec), spec;
	}
	if (name == "axb") {
		// affine line: basis (a, b) with [a, b] = b
		auto c = zero_constants(2);
		set_bracket(c, 2, 0, 1, 1, Rational(1));
		LieAlgebraSpec spec(name, {"a", "b"}, std::move(c));
		return validate_algebra(spec), spec;
	}
	throw UnknownAlgebra(name);
}

LieAlgebraSpec algebra_from_json(const std::string& json_text)
{
	nlohmann::json j = nlohmann::json::parse(json_text);
	int n = j.at("dim").get<int>();
	std::vector<std::string> names;
	if (j.contains("names"))
		names = j.at("names").get<std::vector<std::string>>();
	else
		for (int i = 1; i <= n; ++i)
			names.push_back("e" + std::to_string(i));
	if (static_cast<int>(names.size()) != n)
		throw Error("names array length does not match dim");
	auto c = zero_constants(n);
	if (j.contains("brackets"))
		for (const auto& b : j.at("brackets")) {
			int i = b.at("i").get<int>() - 1;
			int jj = b.at("j").get<int>() - 1;
			if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj)
				throw Error("bracket entries must satisfy 1 <= i < j <= dim");
			for (const auto& [key, val] : b.at("coeffs").items()) {
				int k = std::stoi(key) - 1;
				if (k < 0 || k >= n)
					throw Error("bracket target index out of range");
				set_bracket(c, n, i, jj, k, rational_from_string(val.get<std::string>()));
			}
		}
	std::string name = j.value("name", std::string("custom"));
	LieAlgebraSpec spec(name, names, std::move(c));
	validate_algebra(spec);
	return spec;
}

std::string algebra_to_json(const LieAlgebraSpec& spec)
{
	nlohmann::json j;
	j["dim"] = spec.dim();
	j["name"] = spec.name();
	j["names"] = spec.basis_names();
	nlohmann::json brackets = nlohmann::json::array();
	for (int i = 0; i < spec.dim(); ++i)
		for (int jj = i + 1; jj < spec.dim(); ++jj) {
			nlohmann::json coeffs;
			for (int k = 0; k < spec.dim(); ++k)
				if (spec.c(i, jj, k) != 0)
					coeffs[std::to_string(k + 1)] = to_string(spec.c(i, jj, k));
			if (!coeffs.empty())
				brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
		}
	j["brackets"] = brackets;
	return j.dump(2);
}

} // namespace liestar
