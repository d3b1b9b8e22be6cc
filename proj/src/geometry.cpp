#include "lorentz3/geometry.hpp"

namespace lorentz3 {

Mat metric() { return Mat::diag({Scalar(kSignature[0]), Scalar(kSignature[1]), Scalar(kSignature[2])}); }

Connection levi_civita(const LieAlgebra3& g) {
	const auto& eps = kSignature;
	Connection conn;
	for (int k = 0; k < 3; ++k)
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				// Koszul: 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
				Scalar s = eps[k] * g.c(k, i, j) - eps[i] * g.c(i, j, k) + eps[j] * g.c(j, k, i);
				conn(k, i, j) = s / (2 * eps[k]);
			}
	return conn;
}

Curvature curvature(const LieAlgebra3& g, const Connection& conn) {
	// nn(n, i, j, k): component n of nabla_i nabla_j e_k
	std::array<Scalar, 81> nn;
	nn.fill(Scalar(0));
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				for (int m = 0; m < 3; ++m) {
					if (conn(m, j, k) == 0) continue;
					for (int n = 0; n < 3; ++n) nn[((n * 3 + i) * 3 + j) * 3 + k] += conn(m, j, k) * conn(n, i, m);
				}
	auto at = [&nn](int n, int i, int j, int k) -> const Scalar& { return nn[((n * 3 + i) * 3 + j) * 3 + k]; };

	Curvature curv;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
				for (int l = 0; l < 3; ++l) {
					Scalar v = at(l, j, i, k) - at(l, i, j, k);
					for (int m = 0; m < 3; ++m) v += g.c(m, i, j) * conn(l, m, k);
					curv(i, j, k, l) = kSignature[l] * v;
				}
	return curv;
}

RicciData ricci(const LieAlgebra3&, const Curvature& curv) {
	RicciData out{Mat(3, 3), Mat(3, 3), Scalar(0)};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			Scalar s = 0;
			for (int k = 0; k < 3; ++k) s += kSignature[k] * curv(i, k, j, k);
			out.rho(i, j) = s;
			out.ric(i, j) = kSignature[i] * s;
		}
	out.scalar = out.ric.trace();
	return out;
}

RicciData ricci(const LieAlgebra3& g) { return ricci(g, curvature(g, levi_civita(g))); }

Mat lie_derivative_metric(const LieAlgebra3& g, const Vec& x) {
	const Mat a = ad(g, x);
	Mat out(3, 3);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) out(i, j) = -kSignature[j] * a(j, i) - kSignature[i] * a(i, j);
	return out;
}

}  // namespace lorentz3
