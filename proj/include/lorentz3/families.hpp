#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lorentz3/liealg.hpp"

namespace lorentz3 {

enum class Family { G1 = 1, G2, G3, G4, G5, G6, G7 };

inline constexpr std::array<Family, 7> kAllFamilies{Family::G1, Family::G2, Family::G3, Family::G4,
                                                    Family::G5, Family::G6, Family::G7};

struct FamilyParams {
	Scalar alpha = 0;
	Scalar beta = 0;
	Scalar gamma = 0;
	Scalar delta = 0;
	Scalar eta = 1;

	friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilySpec {
	Family family = Family::G3;
	FamilyParams params;

	friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(Family f);
Family parse_family(const std::string& name);
// Parameter keys that enter the brackets of f ("alpha", "beta", ...).
const std::vector<std::string>& parameter_keys(Family f);
Scalar& param(FamilyParams& p, const std::string& key);
const Scalar& param(const FamilyParams& p, const std::string& key);

// Names the first violated side condition, e.g. "α+δ ≠ 0".
std::optional<std::string> violated_constraint(const FamilySpec& spec);
LieAlgebra3 build(const FamilySpec& spec);  // throws InputError on a violated constraint

struct Classification {
	bool has_nontrivial = false;  // a non-trivial bullet of the classification theorem holds
	std::string branch;           // that bullet, empty otherwise
	std::string case_label;       // matching case of the per-family theorem, incl. Einstein cases
	std::string group_name;
	bool exists = false;           // some algebraic soliton exists
	bool trivial = false;          // the stated D vanishes
	std::optional<Scalar> c;       // stated c (absent for the abelian scalar family)
	std::optional<Mat> d;          // stated D
	bool scalar_family = false;    // abelian: D = lambda I, c = -lambda
	bool in_table_domain = true;   // G3 sign pattern appears in Table 1

	friend bool operator==(const Classification&, const Classification&) = default;
};

Classification theorem_predicate(const FamilySpec& spec);
std::string group_name(const FamilySpec& spec);

// Random valid spec; small rationals with zeros and branch coincidences over-represented.
// G3 draws stay inside the Table 1 sign patterns.
FamilySpec random_spec(Family f, std::mt19937_64& rng);
Scalar random_scalar(std::mt19937_64& rng, double zero_prob = 0.2);
Scalar random_nonzero(std::mt19937_64& rng);

}  // namespace lorentz3
