#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "lorentz3/verify.hpp"

using namespace lorentz3;

namespace {

VerifyOptions quick() {
	VerifyOptions o;
	o.lemma_draws = 8;
	o.branch_points = 2;
	o.negative_draws = 10;
	o.sweep_points = 30;
	return o;
}

const CheckResult& check_named(const VerifyReport& r, const std::string& name) {
	auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
	REQUIRE(it != r.checks.end());
	return *it;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("verify_paper passes with the registered deviations") {
	const auto rep = verify_paper(quick());
	CHECK(rep.ok());
	for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
	CHECK(rep.checks.size() == 21);
	CHECK(rep.deviations.size() == known_deviations().size());
}

TEST_CASE("a perturbed connection table fails the G2 lemma check by name") {
	auto opts = quick();
	opts.lemma = [](const FamilySpec& s) {
		auto p = paper_lemma(s);
		if (s.family == Family::G2) p.nabla[1][0][1] += 1;
		return p;
	};
	const auto rep = verify_paper(opts);
	CHECK_FALSE(rep.ok());
	CHECK_FALSE(check_named(rep, "G2 lemma").passed);
	CHECK(check_named(rep, "G1 lemma").passed);
	CHECK(check_named(rep, "G3 lemma").passed);
}

TEST_CASE("verify_paper is deterministic for a fixed seed") {
	const auto a = verify_paper(quick());
	const auto b = verify_paper(quick());
	REQUIRE(a.checks.size() == b.checks.size());
	for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
}

TEST_CASE("compare_lemma flags registered deviations only where they occur") {
	const FamilySpec g3{Family::G3, {1, 1, -1}};
	const auto cmp = compare_lemma(g3, paper_lemma(g3));
	CHECK(cmp.ok());
	CHECK(has(cmp.deviations, "g3.R2323"));

	const FamilySpec g1{Family::G1, {1, 0}};
	const auto c1 = compare_lemma(g1, paper_lemma(g1));
	CHECK(c1.ok());
	CHECK(c1.deviations.empty());
}

TEST_CASE("paper L_Y g and flow matrices agree with the pipeline") {
	const auto g1 = build({Family::G1, {1, 0}});
	for (int trial = 0; trial < 20; ++trial) {
		const Vec y = gen::vec(3);
		CHECK(paper_lie_derivative_g1(1, y) == lie_derivative_metric(g1, y));
		const auto s = gen::spec(Family::G4);
		CHECK(paper_lie_derivative_g4(s.params, y) == lie_derivative_metric(build(s), y));
	}
	const auto sol = solve_algebraic(g1);
	for (const Scalar t : {Scalar(1), Scalar(-2, 3)}) CHECK(paper_flow_g1(1, t) == *flow_factor(sol, t).exact);
}

TEST_CASE("every theorem branch sample satisfies its own case") {
	std::mt19937_64 rng(7);
	for (const auto& b : theorem_branches()) {
		const auto s = b.sample(rng);
		CHECK(s.family == b.family);
		CHECK_FALSE(violated_constraint(s));
		const auto cl = theorem_predicate(s);
		CHECK_MESSAGE(cl.case_label == b.id, b.id);
		CHECK(matches_stated(solve_algebraic(build(s)), cl));
	}
	for (const auto& n : negative_cases()) {
		const auto s = n.sample(rng);
		CHECK_MESSAGE(solve_algebraic(build(s)).status == SolutionStatus::none, n.id);
	}
}
