#include "lorentz3/liealg.hpp"

namespace lorentz3 {

LieAlgebra3::LieAlgebra3() { c_.fill(Scalar(0)); }

LieAlgebra3 LieAlgebra3::from_brackets(const Vec& e12, const Vec& e13, const Vec& e23) {
	if (e12.size() != 3 || e13.size() != 3 || e23.size() != 3)
		throw ContractViolation("bracket vectors must have 3 components");
	LieAlgebra3 g;
	auto set = [&g](int i, int j, const Vec& v) {
		for (int k = 0; k < 3; ++k) {
			g.c_[k * 9 + i * 3 + j] = v[k];
			g.c_[k * 9 + j * 3 + i] = -v[k];
		}
	};
	set(0, 1, e12);
	set(0, 2, e13);
	set(1, 2, e23);
	return g;
}

LieAlgebra3 LieAlgebra3::from_constants(const std::array<Scalar, 27>& c) {
	for (int k = 0; k < 3; ++k)
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				if (c[k * 9 + i * 3 + j] != -c[k * 9 + j * 3 + i])
					throw ContractViolation("structure constants not antisymmetric");
	LieAlgebra3 g;
	g.c_ = c;
	return g;
}

Vec LieAlgebra3::bracket_basis(int i, int j) const {
	return {c(0, i, j), c(1, i, j), c(2, i, j)};
}

Vec LieAlgebra3::bracket(const Vec& x, const Vec& y) const {
	Vec out(3, Scalar(0));
	for (int i = 0; i < 3; ++i) {
		if (x[i] == 0) continue;
		for (int j = 0; j < 3; ++j) {
			if (y[j] == 0) continue;
			const Scalar xy = x[i] * y[j];
			for (int k = 0; k < 3; ++k) out[k] += xy * c(k, i, j);
		}
	}
	return out;
}

LieAlgebra3 LieAlgebra3::scaled(const Scalar& lambda) const {
	LieAlgebra3 g = *this;
	for (auto& x : g.c_) x *= lambda;
	return g;
}

namespace {

Vec basis_vec(int i) {
	Vec v(3, Scalar(0));
	v[i] = 1;
	return v;
}

Vec add(Vec a, const Vec& b) {
	for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
	return a;
}

}  // namespace

Vec jacobi_residual(const LieAlgebra3& g) {
	const Vec e1 = basis_vec(0), e2 = basis_vec(1), e3 = basis_vec(2);
	Vec s = g.bracket(g.bracket(e1, e2), e3);
	s = add(s, g.bracket(g.bracket(e2, e3), e1));
	return add(s, g.bracket(g.bracket(e3, e1), e2));
}

bool jacobi_check(const LieAlgebra3& g) {
	for (const auto& x : jacobi_residual(g))
		if (x != 0) return false;
	return true;
}

Mat ad(const LieAlgebra3& g, const Vec& x) {
	Mat m(3, 3);
	for (int l = 0; l < 3; ++l) {
		const Vec col = g.bracket(x, basis_vec(l));
		for (int k = 0; k < 3; ++k) m(k, l) = col[k];
	}
	return m;
}

bool is_unimodular(const LieAlgebra3& g) {
	for (int i = 0; i < 3; ++i)
		if (ad(g, basis_vec(i)).trace() != 0) return false;
	return true;
}

std::vector<Vec> unimodular_kernel(const LieAlgebra3& g) {
	Mat functional(1, 3);
	for (int i = 0; i < 3; ++i) functional(0, i) = ad(g, basis_vec(i)).trace();
	return nullspace(functional);
}

Mat derivation_system(const LieAlgebra3& g) {
	// Unknown 3r+c is D(r,c), so D e_l is column l.
	Mat s(9, 9);
	int row = 0;
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j < 3; ++j)
			for (int k = 0; k < 3; ++k, ++row) {
				for (int m = 0; m < 3; ++m) {
					s(row, 3 * k + m) += g.c(m, i, j);   // D[e_i,e_j]
					s(row, 3 * m + i) -= g.c(k, m, j);   // [D e_i, e_j]
					s(row, 3 * m + j) -= g.c(k, i, m);   // [e_i, D e_j]
				}
			}
	return s;
}

DerivationSpace derivation_space(const LieAlgebra3& g) {
	DerivationSpace d{{}, g};
	for (const auto& v : nullspace(derivation_system(g))) d.basis.push_back(unflatten(v, 3, 3));
	return d;
}

bool is_derivation(const LieAlgebra3& g, const Mat& d) {
	if (d.rows() != 3 || d.cols() != 3) return false;
	for (const auto& x : derivation_system(g) * flatten(d))
		if (x != 0) return false;
	return true;
}

std::optional<Vec> is_inner(const LieAlgebra3& g, const Mat& d) {
	if (!is_derivation(g, d)) throw ContractViolation("is_inner: argument is not a derivation");
	// ad(x)(k,l) = sum_a x_a C^k_al
	Mat a(9, 3);
	for (int k = 0; k < 3; ++k)
		for (int l = 0; l < 3; ++l)
			for (int i = 0; i < 3; ++i) a(3 * k + l, i) = g.c(k, i, l);
	auto sol = solve_affine(a, flatten(d));
	if (sol.kind == AffineSolution::Kind::empty) return std::nullopt;
	return sol.particular;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

bool in_span(const std::vector<Mat>& basis, const Mat& m) {
	std::vector<Vec> cols;
	for (const auto& b : basis) cols.push_back(flatten(b));
	if (cols.empty()) return m.is_zero();
	return solve_affine(from_columns(cols), flatten(m)).kind != AffineSolution::Kind::empty;
}

}  // namespace lorentz3
