#include <doctest.h>

#include "gen.hpp"
#include "lorentz3/geometry.hpp"
#include "lorentz3/families.hpp"

using namespace lorentz3;

namespace {

LieAlgebra3 fam(Family f, Scalar a, Scalar b = 0, Scalar g = 0, Scalar d = 0, Scalar eta = 1) {
	return build({f, {a, b, g, d, eta}});
}

Scalar inner(const Vec& x, const Vec& y) { return x[0] * y[0] + x[1] * y[1] - x[2] * y[2]; }

Vec basis(int i) {
	Vec v(3, Scalar(0));
	v[i] = 1;
	return v;
}

Vec add(Vec x, const Vec& y, const Scalar& s = 1) {
	for (int i = 0; i < 3; ++i) x[i] += s * y[i];
	return x;
}

// Independent route: nabla_X Y = [X,Y]/2 + U(X,Y) with 2<U(X,Y),Z> = <[Z,X],Y> + <X,[Z,Y]>.
Vec oracle_nabla(const LieAlgebra3& g, int i, int j) {
	const Vec x = basis(i), y = basis(j);
	Vec out = g.bracket(x, y);
	for (auto& v : out) v /= 2;
	for (int k = 0; k < 3; ++k) {
		const Vec z = basis(k);
		const Scalar u = (inner(g.bracket(z, x), y) + inner(x, g.bracket(z, y))) / 2;
		out[k] += u / inner(z, z);
	}
	return out;
}

// Independent route to Ricci: connection operators as matrices, R(X,Y) = L_[X,Y] - [L_X, L_Y].
Mat oracle_rho(const LieAlgebra3& g) {
	std::array<Mat, 3> l{Mat(3, 3), Mat(3, 3), Mat(3, 3)};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			const Vec v = oracle_nabla(g, i, j);
			for (int k = 0; k < 3; ++k) l[i](k, j) = v[k];
		}
	auto op = [&](const Vec& x) {
		Mat m(3, 3);
		for (int i = 0; i < 3; ++i) m += l[i] * x[i];
		return m;
	};
	Mat rho(3, 3);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k) {
				const Mat r = op(g.bracket(basis(i), basis(k))) - (l[i] * l[k] - l[k] * l[i]);
				rho(i, j) += kSignature[k] * inner(r * basis(j), basis(k));
			}
	return rho;
}

}  // namespace

TEST_CASE("metric") { CHECK(metric() == Mat::diag({1, 1, -1})); }

TEST_CASE("levi_civita examples") {
	const auto zero = levi_civita(LieAlgebra3{});
	for (const auto& x : zero.gamma) CHECK(x == 0);

	const auto g1 = levi_civita(fam(Family::G1, 1, 0));
	CHECK(g1.nabla(0, 0) == Vec{0, -1, -1});
	CHECK(g1.nabla(1, 1) == Vec{0, 0, 1});
	CHECK(g1.nabla(2, 2) == Vec{0, -1, 0});
	CHECK(g1.nabla(1, 0) == Vec{0, 0, 0});
	CHECK(g1.nabla(2, 1) == Vec{0, 0, -1});

	const auto g3 = levi_civita(fam(Family::G3, 1, 1, 1));
	CHECK(g3.nabla(0, 1) == Vec{0, 0, Scalar(-1, 2)});
	CHECK(g3.nabla(1, 0) == Vec{0, 0, Scalar(1, 2)});
	CHECK(g3.nabla(2, 0) == Vec{0, Scalar(1, 2), 0});
}

TEST_CASE("curvature examples") {
	const auto zero = curvature(LieAlgebra3{}, levi_civita(LieAlgebra3{}));
	for (const auto& x : zero.r) CHECK(x == 0);

	const auto g1 = fam(Family::G1, 1, 0);
	const auto r1 = curvature(g1, levi_civita(g1));
	CHECK(r1(0, 1, 0, 1) == -2);
	CHECK(r1(0, 2, 0, 2) == -2);
	CHECK(r1(1, 2, 1, 2) == 0);
	CHECK(r1(0, 1, 0, 2) == 2);

	const auto g3 = fam(Family::G3, 1, 1, 1);
	CHECK(curvature(g3, levi_civita(g3))(0, 1, 0, 1) == Scalar(-1, 4));
}

TEST_CASE("ricci examples") {
	CHECK(ricci(fam(Family::G1, 1, 0)).ric == Mat{{0, 0, 0}, {0, -2, 2}, {0, -2, 2}});
	CHECK(ricci(fam(Family::G2, 0, 0, 1)).ric == Mat::diag({-2, 0, 0}));
	const auto r5 = ricci(fam(Family::G5, 1, 0, 0, 2));
	CHECK(r5.ric == Mat::diag({3, 6, 5}));
	CHECK(r5.scalar == 14);
	CHECK(ricci(LieAlgebra3{}).ric.is_zero());
}

TEST_CASE("lie_derivative_metric examples") {
	CHECK(lie_derivative_metric(fam(Family::G1, 1, 3), {0, 0, 0}).is_zero());
	for (const Scalar b : {Scalar(0), Scalar(1), Scalar(-5, 2)})
		CHECK(lie_derivative_metric(fam(Family::G1, 1, b), basis(1)) == Mat{{2, 0, 0}, {0, 0, -1}, {0, -1, 2}});
	for (int trial = 0; trial < 20; ++trial) {
		const auto s = gen::spec(Family::G4);
		const Scalar eta = s.params.eta;
		CHECK(lie_derivative_metric(build(s), basis(0)) == Mat{{0, 0, 0}, {0, 2, 2 * eta}, {0, 2 * eta, 2}});
	}
}

TEST_CASE("property: connection agrees with the U-tensor formula") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 25; ++trial) {
			const auto g = build(gen::spec(f));
			const auto conn = levi_civita(g);
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j) CHECK(conn.nabla(i, j) == oracle_nabla(g, i, j));
		}
}

TEST_CASE("property: torsion-free and metric-compatible") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 25; ++trial) {
			const auto g = build(gen::spec(f));
			const auto conn = levi_civita(g);
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j) {
					CHECK(add(conn.nabla(i, j), conn.nabla(j, i), -1) == g.bracket(basis(i), basis(j)));
					for (int k = 0; k < 3; ++k)
						CHECK(inner(conn.nabla(k, i), basis(j)) + inner(basis(i), conn.nabla(k, j)) == 0);
				}
		}
}

TEST_CASE("property: curvature symmetries and first Bianchi identity") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 25; ++trial) {
			const auto g = build(gen::spec(f));
			const auto r = curvature(g, levi_civita(g));
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k)
						for (int l = 0; l < 3; ++l) {
							CHECK(r(i, j, k, l) == -r(j, i, k, l));
							CHECK(r(i, j, k, l) == -r(i, j, l, k));
							CHECK(r(i, j, k, l) == r(k, l, i, j));
							CHECK(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l) == 0);
						}
		}
}

TEST_CASE("property: Ricci agrees with the operator route and is self-adjoint") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 25; ++trial) {
			const auto g = build(gen::spec(f));
			const auto ric = ricci(g);
			CHECK(ric.rho == oracle_rho(g));
			CHECK(ric.rho == ric.rho.transpose());
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j) {
					CHECK(ric.ric(i, j) == kSignature[i] * ric.rho(i, j));
					CHECK(kSignature[i] * ric.ric(i, j) == kSignature[j] * ric.ric(j, i));
				}
			CHECK(ric.scalar == ric.ric.trace());
		}
}

TEST_CASE("property: Ricci scales quadratically with the brackets") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 20; ++trial) {
			const auto g = build(gen::spec(f));
			const Scalar lambda = gen::nonzero();
			const auto base = ricci(g);
			const auto scaled = ricci(g.scaled(lambda));
			CHECK(scaled.ric == base.ric * (lambda * lambda));
			CHECK(scaled.scalar == lambda * lambda * base.scalar);
		}
}

TEST_CASE("property: L_x g is symmetric and linear in x") {
	for (Family f : kAllFamilies)
		for (int trial = 0; trial < 10; ++trial) {
			const auto g = build(gen::spec(f));
			const Vec x = gen::vec(3), y = gen::vec(3);
			const Scalar s = gen::rational();
			const Mat lx = lie_derivative_metric(g, x);
			CHECK(lx == lx.transpose());
			CHECK(lie_derivative_metric(g, add(x, y, s)) == lx + lie_derivative_metric(g, y) * s);
		}
}
