#pragma once

// Hand-rolled generators for property tests.

#include <random>

#include "lorentz3/exactmath.hpp"
#include "lorentz3/families.hpp"

namespace gen {

inline std::mt19937_64& rng() {
	static std::mt19937_64 r(0x5eed);
	return r;
}

inline int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline lorentz3::Scalar rational(int span = 5, double zero_prob = 0.25) {
	if (std::bernoulli_distribution(zero_prob)(rng())) return 0;
	lorentz3::Scalar x(int_in(-span, span), int_in(1, 4));
	x.canonicalize();
	return x;
}

inline lorentz3::Scalar nonzero() {
	for (;;)
		if (auto x = rational(5, 0.0); x != 0) return x;
}

inline lorentz3::Mat matrix(std::size_t r, std::size_t c, double zero_prob = 0.3) {
	lorentz3::Mat m(r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(5, zero_prob);
	return m;
}

// Strictly upper triangular, hence nilpotent.
inline lorentz3::Mat nilpotent(std::size_t n) {
	lorentz3::Mat m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rational();
	return m;
}

inline lorentz3::Vec vec(std::size_t n) {
	lorentz3::Vec v;
	for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
	return v;
}

inline lorentz3::FamilySpec spec(lorentz3::Family f) { return lorentz3::random_spec(f, rng()); }

}  // namespace gen
