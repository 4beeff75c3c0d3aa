#pragma once

#include "kforge/matrix.hpp"
#include "kforge/random.hpp"

#include <string>

namespace kforge
{

/// Real 2m x 2m matrix J with J^2 = -I.
class ComplexStructure
{
  public:
	/// Throws MathError unless J is real, square, even-sized and squares to -I.
	explicit ComplexStructure(Matrix J);
	static ComplexStructure standard(size_t half_dim);

	Matrix const &matrix() const { return J_; }
	size_t dim() const { return J_.rows(); }
	size_t half_dim() const { return J_.rows() / 2; }

  private:
	Matrix J_;
};

/**
 * Type decomposition V^C = V^{1,0} + V^{0,1} of a complex structure. The
 * bases are the first independent columns of the projectors; `coords10` and
 * `coords01` send v in V^C to the coordinates of its (1,0) and (0,1) parts.
 */
struct TypeDecomposition
{
	Matrix pi10;
	Matrix pi01;
	Matrix basis10;
	Matrix basis01;
	Matrix coords10;
	Matrix coords01;
};

/// pi^{1,0} = (I - iJ)/2 and pi^{0,1} = (I + iJ)/2 with their bases.
TypeDecomposition projectors(ComplexStructure const &J);

/// Beltrami map of J' relative to J, as an m x m matrix from the V_J^{0,1}
/// basis to the V_J^{1,0} basis. Throws MathError "structures not comparable"
/// when pi^{0,1} restricted to V_{J'}^{0,1} is not invertible.
Matrix beltrami_of(ComplexStructure const &J, ComplexStructure const &Jp);

/// The complex structure whose (0,1) space is {u + m(u)}. Throws MathError
/// "graph degenerate" when that space meets its conjugate.
ComplexStructure structure_of(ComplexStructure const &J, Matrix const &m);

struct Lemma31Result
{
	bool h1 = false;         ///< phi commutes with J
	bool h2 = false;         ///< phi o m == n o phi on V_J^{0,1}
	bool conclusion = false; ///< J_n phi == phi J_m

	bool premise() const { return h1 && h2; }
	/// False only for a counterexample to the lemma.
	bool consistent() const { return !premise() || conclusion; }
};

/// Throws MathError when m or n does not define a complex structure.
Lemma31Result lemma31_check(Matrix const &phi, ComplexStructure const &J, Matrix const &m, Matrix const &n);

struct Lemma31Instance
{
	Matrix phi;
	ComplexStructure J;
	Matrix m;
	Matrix n;
};

/// Random instance satisfying both hypotheses by construction: J conjugate to
/// the standard structure, phi invertible and J-linear, n = phi m phi^{-1}.
Lemma31Instance random_lemma31_instance(ExactRandom &rng, size_t half_dim);

} // namespace kforge
