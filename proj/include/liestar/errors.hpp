#ifndef LIESTAR_ERRORS_HPP
#define LIESTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liestar {

struct Error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct AntisymmetryViolation : Error
{
	int i, j, k;
	AntisymmetryViolation(int i_, int j_, int k_)
	    : Error("antisymmetry violated at c[" + std::to_string(i_) + "][" +
	            std::to_string(j_) + "][" + std::to_string(k_) + "]"),
	      i(i_), j(j_), k(k_)
	{}
};

struct JacobiViolation : Error
{
	int i, j, k, l;
	JacobiViolation(int i_, int j_, int k_, int l_)
	    : Error("Jacobi identity violated at (" + std::to_string(i_) + "," +
	            std::to_string(j_) + "," + std::to_string(k_) + "," + std::to_string(l_) +
	            ")"),
	      i(i_), j(j_), k(k_), l(l_)
	{}
};

struct DimensionMismatch : Error
{
	DimensionMismatch() : Error("element length does not match algebra dimension") {}
};

struct AlgebraMismatch : Error
{
	AlgebraMismatch() : Error("operands belong to different Lie algebras") {}
};

struct UnknownAlgebra : Error
{
	explicit UnknownAlgebra(const std::string& name)
	    : Error("unknown algebra '" + name + "'")
	{}
};

struct JetOrderExhausted : Error
{
	JetOrderExhausted() : Error("word length exceeds jet order") {}
};

struct JetNotEvaluable : Error
{
	JetNotEvaluable() : Error("jets evaluate only at their base point") {}
};

struct NonNormalizableBasis : Error
{
	NonNormalizableBasis() : Error("representation matrix is zero; cannot normalize basis") {}
};

struct FiberConstantRequired : Error
{
	FiberConstantRequired() : Error("second factor must be constant in fiber direction") {}
};

struct GroupDataMismatch : Error
{
	GroupDataMismatch() : Error("operands carry different group/representation data") {}
};

struct ParseError : Error
{
	using Error::Error;
};

} // namespace liestar

#endif
