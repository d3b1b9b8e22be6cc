#include "lorentz3/exactmath.hpp"

#include <cmath>
#include <regex>

namespace lorentz3 {

namespace {

std::size_t bit_size(const Scalar& x) {
	return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

using LongMat = Matrix<long double>;

long double inf_norm(const LongMat& m) {
	long double best = 0;
	for (std::size_t i = 0; i < m.rows(); ++i) {
		long double s = 0;
		for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j));
		best = std::max(best, s);
	}
	return best;
}

}  // namespace

Echelon rref(Mat m) {
	Echelon e;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
		// Row pivoting only: column order fixes the free-column convention.
		std::optional<std::size_t> piv;
		for (std::size_t r = row; r < m.rows(); ++r) {
			if (m(r, col) == 0) continue;
			if (!piv || bit_size(m(r, col)) < bit_size(m(*piv, col))) piv = r;
		}
		if (!piv) continue;
		if (*piv != row)
			for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*piv, c));
		const Scalar inv = 1 / m(row, col);
		for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
		for (std::size_t r = 0; r < m.rows(); ++r) {
			if (r == row || m(r, col) == 0) continue;
			const Scalar f = m(r, col);
			for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
		}
		e.pivots.push_back(col);
		++row;
	}
	e.r = std::move(m);
	return e;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Mat& m) {
	const auto e = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : e.pivots) is_pivot[p] = true;
	std::vector<Vec> basis;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f]) continue;
		Vec v(m.cols(), Scalar(0));
		v[f] = 1;
		for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.r(i, f);
		basis.push_back(std::move(v));
	}
	return basis;
}

AffineSolution solve_affine(const Mat& a, const Vec& b) {
	if (a.rows() != b.size()) throw ContractViolation("solve_affine: a.rows != length(b)");
	const std::size_t n = a.cols();
	Mat aug(a.rows(), n + 1);
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
		aug(i, n) = b[i];
	}
	const auto e = rref(std::move(aug));
	AffineSolution out;
	if (!e.pivots.empty() && e.pivots.back() == n) return out;
	Vec x(n, Scalar(0));
	for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r(i, n);
	out.particular = std::move(x);
	out.kernel_basis = nullspace(a);
	out.kind = out.kernel_basis.empty() ? AffineSolution::Kind::point : AffineSolution::Kind::family;
	return out;
}

Mat from_columns(const std::vector<Vec>& cols) {
	if (cols.empty()) return {};
	Mat m(cols.front().size(), cols.size());
	for (std::size_t j = 0; j < cols.size(); ++j) {
		if (cols[j].size() != m.rows()) throw ContractViolation("from_columns: ragged columns");
		for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
	}
	return m;
}

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
	if (v.size() != rows * cols) throw ContractViolation("unflatten: size mismatch");
	Mat m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
	return m;
}

bool is_nilpotent(const Mat& m) {
	if (!m.square()) throw ContractViolation("is_nilpotent: matrix not square");
	Mat p = Mat::identity(m.rows());
	for (std::size_t k = 0; k < m.rows(); ++k) p = p * m;
	return p.is_zero();
}

std::optional<std::vector<Mat>> nilpotent_exp_coefficients(const Mat& m) {
	if (!is_nilpotent(m)) return std::nullopt;
	std::vector<Mat> c{Mat::identity(m.rows())};
	for (std::size_t k = 1;; ++k) {
		Mat next = c.back() * m * Scalar(1, k);
		if (next.is_zero()) break;
		c.push_back(std::move(next));
	}
	return c;
}

RealMat to_real(const Mat& m) {
	RealMat r(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
	return r;
}

RealMat mat_exp(const Mat& m, double t) {
	if (!m.square()) throw ContractViolation("mat_exp: matrix not square");
	const std::size_t n = m.rows();
	LongMat a(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long double>(m(i, j).get_d()) * t;

	int squarings = 0;
	const long double norm = inf_norm(a);
	if (norm > 0.5L) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5L)));
	a *= std::ldexp(1.0L, -squarings);

	LongMat sum = LongMat::identity(n);
	LongMat term = LongMat::identity(n);
	for (int k = 1; k < 40; ++k) {
		term = term * a;
		term *= 1.0L / k;
		sum += term;
		if (inf_norm(term) <= 1e-30L * inf_norm(sum)) break;
	}
	for (int s = 0; s < squarings; ++s) sum = sum * sum;

	RealMat out(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) out(i, j) = static_cast<double>(sum(i, j));
	return out;
}

Exponential mat_exp(const Mat& m, const Scalar& t) {
	if (!m.square()) throw ContractViolation("mat_exp: matrix not square");
	Exponential e;
	if (auto coeffs = nilpotent_exp_coefficients(m)) {
		Mat acc(m.rows(), m.cols());
		Scalar tk = 1;
		for (const auto& c : *coeffs) {
			acc += c * tk;
			tk *= t;
		}
		e.value = to_real(acc);
		e.exact = std::move(acc);
		return e;
	}
	e.value = mat_exp(m, t.get_d());
	return e;
}

Scalar parse_scalar(const std::string& text) {
	static const std::regex pattern(R"(\s*([+-]?)(\d+)(?:/(\d+))?\s*)");
	std::smatch mt;
	if (!std::regex_match(text, mt, pattern)) throw InputError("not a rational literal: '" + text + "'");
	const std::string den = mt[3].matched ? mt[3].str() : "1";
	mpz_class d(den);
	if (d == 0) throw InputError("zero denominator in '" + text + "'");
	Scalar x(mpz_class(mt[2].str()), d);
	x.canonicalize();
	if (mt[1].str() == "-") x = -x;
	return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace lorentz3
