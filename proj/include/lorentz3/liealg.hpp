#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lorentz3/exactmath.hpp"

namespace lorentz3 {

// Frame metric g(e_i, e_j) = eps_i delta_ij; e3 is timelike.
inline constexpr std::array<int, 3> kSignature{1, 1, -1};

// Structure constants C^k_ij with [e_i, e_j] = sum_k C^k_ij e_k. Indices are 0-based.
class LieAlgebra3 {
   public:
	LieAlgebra3();  // abelian

	static LieAlgebra3 from_brackets(const Vec& e12, const Vec& e13, const Vec& e23);
	// c[k*9 + i*3 + j] = C^k_ij; throws ContractViolation unless antisymmetric in i, j.
	static LieAlgebra3 from_constants(const std::array<Scalar, 27>& c);

	[[nodiscard]] const Scalar& c(int k, int i, int j) const { return c_[k * 9 + i * 3 + j]; }
	[[nodiscard]] const std::array<Scalar, 27>& constants() const { return c_; }
	[[nodiscard]] const std::array<int, 3>& signature() const { return kSignature; }

	[[nodiscard]] Vec bracket_basis(int i, int j) const;
	[[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const;
	[[nodiscard]] LieAlgebra3 scaled(const Scalar& lambda) const;

	friend bool operator==(const LieAlgebra3&, const LieAlgebra3&) = default;

   private:
	std::array<Scalar, 27> c_;
};

// Cyclic sum [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2].
Vec jacobi_residual(const LieAlgebra3& g);
bool jacobi_check(const LieAlgebra3& g);

Mat ad(const LieAlgebra3& g, const Vec& x);
bool is_unimodular(const LieAlgebra3& g);
std::vector<Vec> unimodular_kernel(const LieAlgebra3& g);

struct DerivationSpace {
	std::vector<Mat> basis;
	LieAlgebra3 algebra;
};

// 9 x 9 system in the entries of D (row-major) whose kernel is Der(g).
Mat derivation_system(const LieAlgebra3& g);
DerivationSpace derivation_space(const LieAlgebra3& g);
bool is_derivation(const LieAlgebra3& g, const Mat& d);

// Witness x with ad(x) = d, or nullopt when d is outer.
std::optional<Vec> is_inner(const LieAlgebra3& g, const Mat& d);

Mat commutator(const Mat& a, const Mat& b);
bool in_span(const std::vector<Mat>& basis, const Mat& m);

}  // namespace lorentz3
