#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lorentz3/families.hpp"
#include "lorentz3/soliton.hpp"

namespace lorentz3 {

using Json = nlohmann::json;  // std::map-backed, so object keys serialize sorted

// Input document: either explicit brackets "12","13","23" or a family block.
struct AlgebraDocument {
	std::optional<std::array<Vec, 3>> brackets;
	std::optional<FamilySpec> family;
};

AlgebraDocument parse_document(const Json& j);
AlgebraDocument load_document(const std::string& path);
// Throws InputError quoting the cyclic sum when Jacobi fails.
LieAlgebra3 algebra_of(const AlgebraDocument& doc);

struct FlowReport {
	Scalar t;
	RealMat matrix;                         // rounded to 15 significant digits
	std::optional<std::vector<Mat>> terms;  // exp(tD/2) = sum_k t^k terms[k] when D is nilpotent

	friend bool operator==(const FlowReport&, const FlowReport&) = default;
};

struct Analysis {
	bool unimodular = false;
	Connection connection;
	std::array<Scalar, 6> curvature;  // R1212, R1313, R2323, R1213, R1223, R1323
	RicciData ricci;
	std::vector<Mat> derivations;
	SolitonSolution soliton;
	LeftInvariantSoliton left_invariant;
	std::optional<FlowReport> flow;

	friend bool operator==(const Analysis&, const Analysis&) = default;
};

struct Report {
	std::array<Vec, 3> brackets;
	std::optional<FamilySpec> family;
	Analysis analysis;
	std::optional<Classification> classification;
	std::vector<std::string> deviations;  // lemma-table mismatches and registered deviations at this point

	friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const LieAlgebra3& g, const std::optional<FamilySpec>& family,
                   const std::optional<Scalar>& flow_t = std::nullopt);
Report make_report(const AlgebraDocument& doc, const std::optional<Scalar>& flow_t = std::nullopt);

Json to_json(const Report& r);
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

double round_sig15(double x);

// Sweep grid axis "key=lo:hi:n", n evenly spaced rationals from lo to hi inclusive.
struct GridAxis {
	std::string key;
	Scalar lo, hi;
	int n = 0;
};
std::vector<GridAxis> parse_grid(const std::string& spec, Family f);

inline constexpr const char* kSweepHeader =
    "family,alpha,beta,gamma,delta,eta,unimodular,soliton_status,c,trivial,predicate_agrees";

// One CSV line per grid point, sorted lexicographically by (alpha, beta, gamma, delta, eta).
std::vector<std::string> sweep(Family f, const std::vector<GridAxis>& grid, unsigned threads = 0);

}  // namespace lorentz3
