#pragma once

#include <array>

#include "lorentz3/liealg.hpp"

namespace lorentz3 {

// nabla_{e_i} e_j = sum_k gamma(k, i, j) e_k
struct Connection {
	std::array<Scalar, 27> gamma;

	[[nodiscard]] const Scalar& operator()(int k, int i, int j) const { return gamma[k * 9 + i * 3 + j]; }
	Scalar& operator()(int k, int i, int j) { return gamma[k * 9 + i * 3 + j]; }
	[[nodiscard]] Vec nabla(int i, int j) const { return {(*this)(0, i, j), (*this)(1, i, j), (*this)(2, i, j)}; }

	friend bool operator==(const Connection&, const Connection&) = default;
};

// r(i,j,k,l) = g(R(e_i,e_j)e_k, e_l) with R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y].
struct Curvature {
	std::array<Scalar, 81> r;

	[[nodiscard]] const Scalar& operator()(int i, int j, int k, int l) const { return r[((i * 3 + j) * 3 + k) * 3 + l]; }
	Scalar& operator()(int i, int j, int k, int l) { return r[((i * 3 + j) * 3 + k) * 3 + l]; }

	friend bool operator==(const Curvature&, const Curvature&) = default;
};

struct RicciData {
	Mat rho;        // rho(e_i, e_j)
	Mat ric;        // operator, ric(i,j) = eps_i rho(i,j)
	Scalar scalar;  // trace of ric

	friend bool operator==(const RicciData&, const RicciData&) = default;
};

Mat metric();
Connection levi_civita(const LieAlgebra3& g);
Curvature curvature(const LieAlgebra3& g, const Connection& conn);
RicciData ricci(const LieAlgebra3& g, const Curvature& curv);
RicciData ricci(const LieAlgebra3& g);

// (L_x g)_ij = -g([x,e_i],e_j) - g(e_i,[x,e_j])
Mat lie_derivative_metric(const LieAlgebra3& g, const Vec& x);

}  // namespace lorentz3
