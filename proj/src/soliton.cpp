#include "lorentz3/soliton.hpp"

#include <algorithm>
#include <cmath>

namespace lorentz3 {

std::string to_string(SolutionStatus s) {
	switch (s) {
		case SolutionStatus::none: return "none";
		case SolutionStatus::unique: return "unique";
		case SolutionStatus::family: return "family";
	}
	return "none";
}

namespace {

SolutionStatus status_of(const AffineSolution& a) {
	switch (a.kind) {
		case AffineSolution::Kind::empty: return SolutionStatus::none;
		case AffineSolution::Kind::point: return SolutionStatus::unique;
		case AffineSolution::Kind::family: return SolutionStatus::family;
	}
	return SolutionStatus::none;
}

Mat combine(const std::vector<Mat>& basis, const Vec& x, std::size_t offset) {
	Mat d(3, 3);
	for (std::size_t i = 0; i < basis.size(); ++i)
		if (x[offset + i] != 0) d += basis[i] * x[offset + i];
	return d;
}

}  // namespace

std::optional<Scalar> einstein_constant(const RicciData& ric) {
	Mat a(9, 1);
	for (int i = 0; i < 3; ++i) a(4 * i, 0) = 1;
	auto sol = solve_affine(a, flatten(ric.ric));
	if (sol.kind == AffineSolution::Kind::empty) return std::nullopt;
	return (*sol.particular)[0];
}

SolitonSolution solve_algebraic(const LieAlgebra3& g, const RicciData& ric, const DerivationSpace& der) {
	const std::size_t m = der.basis.size();
	Mat a(9, m + 1);
	for (int i = 0; i < 3; ++i) a(4 * i, 0) = 1;
	for (std::size_t j = 0; j < m; ++j) {
		const Vec f = flatten(der.basis[j]);
		for (std::size_t r = 0; r < 9; ++r) a(r, j + 1) = f[r];
	}
	const auto aff = solve_affine(a, flatten(ric.ric));

	SolitonSolution out;
	out.status = status_of(aff);
	out.einstein_c = einstein_constant(ric);
	out.trivial = out.einstein_c.has_value();
	if (out.status == SolutionStatus::none) return out;

	out.c = (*aff.particular)[0];
	out.d = combine(der.basis, *aff.particular, 1);
	for (const auto& k : aff.kernel_basis) out.freedom.emplace_back(k[0], combine(der.basis, k, 1));
	out.inner = is_inner(g, out.d);
	return out;
}

SolitonSolution solve_algebraic(const LieAlgebra3& g) {
	return solve_algebraic(g, ricci(g), derivation_space(g));
}

TrivialityResult classify_triviality(const SolitonSolution& sol, const RicciData& ric) {
	if (auto c = einstein_constant(ric)) return {Triviality::einstein, c};
	if (sol.status != SolutionStatus::none) return {Triviality::nontrivial, std::nullopt};
	return {};
}

LeftInvariantSoliton solve_left_invariant(const LieAlgebra3& g, const RicciData& ric) {
	// rho_ij = c g_ij + (L_x g)_ij for i <= j, unknowns (c, x1, x2, x3)
	const Mat gm = metric();
	std::array<Mat, 3> lie;
	for (int a = 0; a < 3; ++a) {
		Vec e(3, Scalar(0));
		e[a] = 1;
		lie[a] = lie_derivative_metric(g, e);
	}
	Mat a(6, 4);
	Vec b(6);
	int row = 0;
	for (int i = 0; i < 3; ++i)
		for (int j = i; j < 3; ++j, ++row) {
			a(row, 0) = gm(i, j);
			for (int k = 0; k < 3; ++k) a(row, k + 1) = lie[k](i, j);
			b[row] = ric.rho(i, j);
		}
	const auto aff = solve_affine(a, b);

	LeftInvariantSoliton out;
	out.status = status_of(aff);
	if (out.status == SolutionStatus::none) return out;
	const Vec& p = *aff.particular;
	out.c = p[0];
	out.x = {p[1], p[2], p[3]};
	for (const auto& k : aff.kernel_basis) out.freedom.emplace_back(k[0], Vec{k[1], k[2], k[3]});
	return out;
}

LeftInvariantSoliton solve_left_invariant(const LieAlgebra3& g) { return solve_left_invariant(g, ricci(g)); }

Exponential flow_factor(const SolitonSolution& sol, const Scalar& t) {
	if (sol.status == SolutionStatus::none) throw ContractViolation("flow_factor: no soliton");
	return mat_exp(sol.d * Scalar(1, 2), t);
}

RealMat flow_factor(const SolitonSolution& sol, double t) {
	if (sol.status == SolutionStatus::none) throw ContractViolation("flow_factor: no soliton");
	return mat_exp(sol.d * Scalar(1, 2), t);
}

bool check_automorphism(const LieAlgebra3& g, const Mat& a) {
	if (a.rows() != 3 || a.cols() != 3 || rank(a) != 3)
		throw ContractViolation("check_automorphism: matrix is singular");
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j < 3; ++j)
			if (a * g.bracket_basis(i, j) != g.bracket(a.column(i), a.column(j))) return false;
	return true;
}

bool check_automorphism(const LieAlgebra3& g, const RealMat& a, double tol) {
	if (a.rows() != 3 || a.cols() != 3) throw ContractViolation("check_automorphism: matrix not 3x3");
	const double det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
	                   a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
	                   a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
	// Hadamard bound: |det| <= product of row norms, with equality for orthogonal rows.
	double hadamard = 1;
	for (int r = 0; r < 3; ++r) hadamard *= std::hypot(a(r, 0), a(r, 1), a(r, 2));
	if (hadamard == 0 || std::fabs(det) <= 1e-12 * hadamard)
		throw ContractViolation("check_automorphism: matrix is singular");

	auto cst = [&g](int k, int i, int j) { return g.c(k, i, j).get_d(); };
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j < 3; ++j)
			for (int k = 0; k < 3; ++k) {
				double lhs = 0, rhs = 0, mag = 0;
				for (int m = 0; m < 3; ++m) {
					lhs += a(k, m) * cst(m, i, j);
					mag += std::fabs(a(k, m) * cst(m, i, j));
				}
				for (int p = 0; p < 3; ++p)
					for (int q = 0; q < 3; ++q) {
						const double term = a(p, i) * a(q, j) * cst(k, p, q);
						rhs += term;
						mag += std::fabs(term);
					}
				if (std::fabs(lhs - rhs) > tol * std::max(1.0, mag)) return false;
			}
	return true;
}

}  // namespace lorentz3
