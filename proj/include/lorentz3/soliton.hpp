#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorentz3/geometry.hpp"

namespace lorentz3 {

enum class SolutionStatus { none, unique, family };
std::string to_string(SolutionStatus s);

// Solution set of Ric = c I + D with D in Der(g): particular (c, d) plus kernel directions.
struct SolitonSolution {
	SolutionStatus status = SolutionStatus::none;
	Scalar c;
	Mat d = Mat(3, 3);
	std::vector<std::pair<Scalar, Mat>> freedom;
	bool trivial = false;               // Ric = c I solvable
	std::optional<Scalar> einstein_c;
	std::optional<Vec> inner;           // witness of ad(x) = d, absent when d is outer

	friend bool operator==(const SolitonSolution&, const SolitonSolution&) = default;
};

struct LeftInvariantSoliton {
	SolutionStatus status = SolutionStatus::none;
	Scalar c;
	Vec x = Vec(3, Scalar(0));
	std::vector<std::pair<Scalar, Vec>> freedom;

	friend bool operator==(const LeftInvariantSoliton&, const LeftInvariantSoliton&) = default;
};

std::optional<Scalar> einstein_constant(const RicciData& ric);

SolitonSolution solve_algebraic(const LieAlgebra3& g, const RicciData& ric, const DerivationSpace& der);
SolitonSolution solve_algebraic(const LieAlgebra3& g);

enum class Triviality { einstein, nontrivial, none };
struct TrivialityResult {
	Triviality kind = Triviality::none;
	std::optional<Scalar> c;
};
TrivialityResult classify_triviality(const SolitonSolution& sol, const RicciData& ric);

LeftInvariantSoliton solve_left_invariant(const LieAlgebra3& g, const RicciData& ric);
LeftInvariantSoliton solve_left_invariant(const LieAlgebra3& g);

// exp(t D / 2) for the particular derivation of sol.
Exponential flow_factor(const SolitonSolution& sol, const Scalar& t);
RealMat flow_factor(const SolitonSolution& sol, double t);

bool check_automorphism(const LieAlgebra3& g, const Mat& a);
bool check_automorphism(const LieAlgebra3& g, const RealMat& a, double tol);

}  // namespace lorentz3
