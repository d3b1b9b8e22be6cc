#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz3 {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
   public:
	using std::logic_error::logic_error;
};

// Raised on malformed user input (parse failures, constraint violations).
class InputError : public std::runtime_error {
   public:
	using std::runtime_error::runtime_error;
};

// Dense row-major matrix.
template <class T>
class Matrix {
   public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
	Matrix(std::initializer_list<std::initializer_list<T>> init) {
		rows_ = init.size();
		cols_ = rows_ ? init.begin()->size() : 0;
		a_.reserve(rows_ * cols_);
		for (const auto& row : init) {
			if (row.size() != cols_) throw ContractViolation("ragged matrix literal");
			a_.insert(a_.end(), row.begin(), row.end());
		}
	}

	static Matrix identity(std::size_t n) {
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
		return m;
	}
	static Matrix diag(const std::vector<T>& d) {
		Matrix m(d.size(), d.size());
		for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
		return m;
	}

	[[nodiscard]] std::size_t rows() const { return rows_; }
	[[nodiscard]] std::size_t cols() const { return cols_; }
	[[nodiscard]] bool square() const { return rows_ == cols_; }
	[[nodiscard]] const std::vector<T>& entries() const { return a_; }

	T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
	const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

	[[nodiscard]] bool is_zero() const {
		for (const auto& x : a_)
			if (x != 0) return false;
		return true;
	}
	[[nodiscard]] T trace() const {
		T s(0);
		for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
		return s;
	}
	[[nodiscard]] Matrix transpose() const {
		Matrix t(cols_, rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
		return t;
	}
	[[nodiscard]] std::vector<T> column(std::size_t c) const {
		std::vector<T> v(rows_);
		for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
		return v;
	}

	friend bool operator==(const Matrix& x, const Matrix& y) {
		return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
	}

	Matrix& operator+=(const Matrix& o) {
		same_shape(o);
		for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
		return *this;
	}
	Matrix& operator-=(const Matrix& o) {
		same_shape(o);
		for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
		return *this;
	}
	Matrix& operator*=(const T& s) {
		for (auto& x : a_) x *= s;
		return *this;
	}
	friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
	friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
	friend Matrix operator-(Matrix x) {
		for (auto& v : x.a_) v = -v;
		return x;
	}
	friend Matrix operator*(Matrix x, const T& s) { return x *= s; }
	friend Matrix operator*(const T& s, Matrix x) { return x *= s; }

	friend Matrix operator*(const Matrix& x, const Matrix& y) {
		if (x.cols_ != y.rows_) throw ContractViolation("matrix product shape mismatch");
		Matrix p(x.rows_, y.cols_);
		for (std::size_t i = 0; i < x.rows_; ++i)
			for (std::size_t k = 0; k < x.cols_; ++k) {
				const T& xik = x(i, k);
				if (xik == 0) continue;
				for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xik * y(k, j);
			}
		return p;
	}
	friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
		if (x.cols_ != v.size()) throw ContractViolation("matrix-vector shape mismatch");
		std::vector<T> out(x.rows_, T(0));
		for (std::size_t i = 0; i < x.rows_; ++i)
			for (std::size_t j = 0; j < x.cols_; ++j) out[i] += x(i, j) * v[j];
		return out;
	}

   private:
	void same_shape(const Matrix& o) const {
		if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix shape mismatch");
	}

	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<T> a_;
};

using Mat = Matrix<Scalar>;
using RealMat = Matrix<double>;

struct Echelon {
	Mat r;                             // reduced row echelon form
	std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);

// Basis of {v : m v = 0}, one vector per free column (1 there, 0 at the other free columns).
std::vector<Vec> nullspace(const Mat& m);

struct AffineSolution {
	enum class Kind { empty, point, family };
	Kind kind = Kind::empty;
	std::optional<Vec> particular;  // free variables set to zero
	std::vector<Vec> kernel_basis;
};

AffineSolution solve_affine(const Mat& a, const Vec& b);

// Builds a matrix from column vectors.
Mat from_columns(const std::vector<Vec>& cols);
// Flattens row-major, and the inverse for a square n x n matrix.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

bool is_nilpotent(const Mat& m);

// exp(t m) = sum_k t^k c_k. Returns the c_k = m^k / k! when m is nilpotent.
std::optional<std::vector<Mat>> nilpotent_exp_coefficients(const Mat& m);

struct Exponential {
	std::optional<Mat> exact;  // set when m is nilpotent
	RealMat value;
};

Exponential mat_exp(const Mat& m, const Scalar& t);
RealMat mat_exp(const Mat& m, double t);
RealMat to_real(const Mat& m);

Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& x);

}  // namespace lorentz3
