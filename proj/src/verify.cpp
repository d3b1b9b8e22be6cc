#include "lorentz3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

namespace lorentz3 {

std::string curvature_label(int slot) {
	const auto& s = kCurvatureSlots.at(slot);
	return "R" + std::to_string(s[0] + 1) + std::to_string(s[1] + 1) + std::to_string(s[2] + 1) +
	       std::to_string(s[3] + 1);
}

namespace {

using Table = std::array<std::array<Vec, 3>, 3>;

Scalar half(const Scalar& x) { return x / 2; }

PaperLemma lemma_g1(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, z = 0;
	PaperLemma l;
	l.nabla = Table{{{Vec{z, -a, -a}, Vec{a, z, -half(b)}, Vec{-a, -half(b), z}},
	                 {Vec{z, z, half(b)}, Vec{z, z, a}, Vec{half(b), a, z}},
	                 {Vec{z, half(b), z}, Vec{-half(b), z, -a}, Vec{z, -a, z}}}};
	l.curvature = {-2 * a * a - b * b / 4, b * b / 4 - 2 * a * a, b * b / 4, 2 * a * a, -a * b, a * b};
	l.ric = Mat{{-b * b / 2, -a * b, a * b},
	            {-a * b, -2 * a * a - b * b / 2, 2 * a * a},
	            {-a * b, -2 * a * a, 2 * a * a - b * b / 2}};
	return l;
}

PaperLemma lemma_g2(const FamilyParams& p) {
	// Corrected table.
	const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, z = 0;
	PaperLemma l;
	l.nabla = Table{{{Vec{z, z, z}, Vec{z, z, half(a) - b}, Vec{z, half(a) - b, z}},
	                 {Vec{z, -g, half(a)}, Vec{g, z, z}, Vec{half(a), z, z}},
	                 {Vec{z, half(a), g}, Vec{-half(a), z, z}, Vec{g, z, z}}}};
	l.curvature = {-g * g - a * a / 4, g * g + a * a / 4, -g * g - 3 * a * a / 4 + a * b, g * (2 * b - a), z, z};
	l.ric = Mat{{-a * a / 2 - 2 * g * g, z, z},
	            {z, a * (half(a) - b), g * (2 * b - a)},
	            {z, g * (a - 2 * b), a * (half(a) - b)}};
	return l;
}

struct G3Aux {
	Scalar a1, a2, a3;
};
G3Aux g3_aux(const FamilyParams& p) {
	return {(p.alpha - p.beta - p.gamma) / 2, (p.alpha - p.beta + p.gamma) / 2, (p.alpha + p.beta - p.gamma) / 2};
}

PaperLemma lemma_g3(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, z = 0;
	const auto [a1, a2, a3] = g3_aux(p);
	PaperLemma l;
	l.nabla = Table{{{Vec{z, z, z}, Vec{z, z, a1}, Vec{z, a1, z}},
	                 {Vec{z, z, a2}, Vec{z, z, z}, Vec{a2, z, z}},
	                 {Vec{z, a3, z}, Vec{-a3, z, z}, Vec{z, z, z}}}};
	l.curvature = {-(a1 * a2 + g * a3), a1 * a3 + b * a2, -(a2 * a3 + a * a3), z, z, z};
	l.ric = Mat::diag({-a1 * a2 - a1 * a3 - b * a2 - g * a3, a2 * a3 - a1 * a2 + a * a1 - g * a3,
	                   -a1 * a3 + a2 * a3 + a * a1 - b * a3});
	return l;
}

PaperLemma lemma_g4(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, &e = p.eta, z = 0, one = 1;
	const Scalar b1 = half(a) + e - b, b2 = half(a) - e, b3 = half(a) + e;
	PaperLemma l;
	l.nabla = Table{{{Vec{z, z, z}, Vec{z, z, b1}, Vec{z, b1, z}},
	                 {Vec{z, one, b2}, Vec{-one, z, z}, Vec{b2, z, z}},
	                 {Vec{z, b3, -one}, Vec{-b3, z, z}, Vec{-one, z, z}}}};
	l.curvature = {(2 * e - b) * b3 - b1 * b2 - 1, b1 * b3 + b * b2 + 1, -(b2 * b3 + a * b1 + 1),
	               2 * e - b + b1 + b2, z, z};
	l.ric = Mat{{-a * a / 2, z, z},
	            {z, a * a / 2 + 2 * e * (a - b) - a * b + 2, a + 2 * e - 2 * b},
	            {z, -a - 2 * e + 2 * b, a * a / 2 - a * b - 2 + 2 * e * b}};
	return l;
}

PaperLemma lemma_g5(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta, z = 0;
	const Scalar s = half(b + g), m = half(b - g);
	PaperLemma l;
	l.nabla = Table{{{Vec{z, z, a}, Vec{z, z, s}, Vec{a, s, z}},
	                 {Vec{z, z, s}, Vec{z, z, d}, Vec{s, d, z}},
	                 {Vec{z, -m, z}, Vec{m, z, z}, Vec{z, z, z}}}};
	l.curvature = {a * d - (b + g) * (b + g) / 4, -a * a - b * (b + g) / 2 - (b * b - g * g) / 4,
	               -d * d - g * (b + g) / 2 + (b * b - g * g) / 4, z, z, z};
	l.ric = Mat::diag({a * a + a * d + (b * b - g * g) / 2, a * d + d * d - (b * b - g * g) / 2,
	                   a * a + d * d + (b + g) * (b + g) / 2});
	return l;
}

PaperLemma lemma_g6(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta, z = 0;
	const Scalar s = half(b + g), m = half(b - g);
	PaperLemma l;
	l.nabla = Table{{{Vec{z, z, z}, Vec{z, z, s}, Vec{z, s, z}},
	                 {Vec{z, -a, -m}, Vec{a, z, z}, Vec{-m, z, z}},
	                 {Vec{z, m, -d}, Vec{-m, z, z}, Vec{-d, z, z}}}};
	l.curvature = {-a * a + (b * b - g * g) / 4 + b * (b - g) / 2, d * d + (b * b - g * g) / 4 + g * (b - g) / 2,
	               a * d + (b - g) * (b - g) / 4, z, z, z};
	l.ric = Mat::diag({-a * a - d * d + (b - g) * (b - g) / 2, -a * a - a * d + (b * b - g * g) / 2,
	                   -d * d - a * d - (b * b - g * g) / 2});
	return l;
}

PaperLemma lemma_g7(const FamilyParams& p) {
	const Scalar &a = p.alpha, &b = p.beta, &g = p.gamma, &d = p.delta, z = 0;
	const Scalar hg = half(g);
	PaperLemma l;
	l.nabla = Table{{{Vec{z, a, a}, Vec{-a, z, hg}, Vec{a, hg, z}},
	                 {Vec{z, b, b + hg}, Vec{-b, z, d}, Vec{b + hg, d, z}},
	                 {Vec{z, -(b - hg), -b}, Vec{b - hg, z, -d}, Vec{-b, -d, z}}}};
	l.curvature = {a * d - a * a - b * g - g * g / 4, a * d - a * a - b * g + g * g / 4, -3 * g * g / 4,
	               a * a - a * d + b * g, z, z};
	l.ric = Mat{{-g * g / 2, z, z},
	            {z, a * d - a * a - b * g + g * g / 2, a * a - a * d + b * g},
	            {z, -a * a + a * d - b * g, -a * d + a * a + b * g + g * g / 2}};
	return l;
}

// Koszul-consistent value for a registered misprint, keyed by (family, item).
std::optional<std::pair<std::string, Scalar>> corrected(const FamilySpec& spec, const std::string& item) {
	if (spec.family != Family::G3) return std::nullopt;
	const auto& p = spec.params;
	const auto [a1, a2, a3] = g3_aux(p);
	if (item == "R2323") return std::pair{std::string("g3.R2323"), Scalar(-(a2 * a3 + p.alpha * a1))};
	if (item == "Ric(3,3)")
		return std::pair{std::string("g3.Ric33"), Scalar(-a1 * a3 + a2 * a3 + p.alpha * a1 - p.beta * a2)};
	return std::nullopt;
}

std::string show(const Scalar& x) { return to_string(x); }

std::string show(const Vec& v) {
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + show(v[i]);
	return s + ")";
}

std::string show(const FamilySpec& spec) {
	std::string s = to_string(spec.family) + "(";
	bool first = true;
	for (const auto& k : parameter_keys(spec.family)) {
		s += (first ? "" : ", ") + k + "=" + show(param(spec.params, k));
		first = false;
	}
	return s + ")";
}

Scalar pos(std::mt19937_64& rng) { return abs(random_nonzero(rng)); }

FamilySpec make(Family f, Scalar a, Scalar b, Scalar g, Scalar d, Scalar eta = 1) {
	return {f, {std::move(a), std::move(b), std::move(g), std::move(d), std::move(eta)}};
}

}  // namespace

PaperLemma paper_lemma(const FamilySpec& spec) {
	switch (spec.family) {
		case Family::G1: return lemma_g1(spec.params);
		case Family::G2: return lemma_g2(spec.params);
		case Family::G3: return lemma_g3(spec.params);
		case Family::G4: return lemma_g4(spec.params);
		case Family::G5: return lemma_g5(spec.params);
		case Family::G6: return lemma_g6(spec.params);
		case Family::G7: return lemma_g7(spec.params);
	}
	throw ContractViolation("unreachable family");
}

const std::vector<KnownDeviation>& known_deviations() {
	static const std::vector<KnownDeviation> d{
	    {"g3.R2323", "G3 curvature: printed R2323 = -(a2a3+αa3); Koszul gives -(a2a3+αa1)"},
	    {"g3.Ric33", "G3 Ricci operator: printed Ric33 uses βa3; Koszul gives -a1a3+a2a3+αa1-βa2"},
	    {"g4.left_invariant",
	     "G4 left-invariant soliton with α≠0 exists only when β=α+η; elsewhere the system is inconsistent"},
	    {"g7.der_dim", "G7 derivations with δ=α, β=0: dimension 6, lemma lists 5 free parameters"},
	};
	return d;
}

LemmaComparison compare_lemma(const FamilySpec& spec, const PaperLemma& paper) {
	const auto g = build(spec);
	const auto conn = levi_civita(g);
	const auto curv = curvature(g, conn);
	const auto ric = ricci(g, curv);

	LemmaComparison out;
	auto check = [&](const std::string& item, const Scalar& got, const Scalar& printed) {
		if (got == printed) return;
		if (auto fix = corrected(spec, item); fix && fix->second == got) {
			out.deviations.push_back(fix->first);
			return;
		}
		out.mismatches.push_back(item + ": computed " + show(got) + ", table " + show(printed));
	};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			const Vec got = conn.nabla(i, j);
			if (got != paper.nabla[i][j])
				out.mismatches.push_back("∇e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + ": computed " +
				                         show(got) + ", table " + show(paper.nabla[i][j]));
		}
	for (int s = 0; s < 6; ++s) {
		const auto& [i, j, k, l] = kCurvatureSlots[s];
		check(curvature_label(s), curv(i, j, k, l), paper.curvature[s]);
	}
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			check("Ric(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", ric.ric(i, j), paper.ric(i, j));
	return out;
}

const std::vector<TheoremBranch>& theorem_branches() {
	using R = std::mt19937_64;
	static const std::vector<TheoremBranch> b{
	    {"G1: β=0", Family::G1, [](R& r) { return make(Family::G1, random_nonzero(r), 0, 0, 0); }},
	    {"G2: α=β=0", Family::G2, [](R& r) { return make(Family::G2, 0, 0, random_nonzero(r), 0); }},
	    {"G3: α>0, β=γ=0", Family::G3, [](R& r) { return make(Family::G3, pos(r), 0, 0, 0); }},
	    {"G3: γ<0, α=β=0", Family::G3, [](R& r) { return make(Family::G3, 0, 0, -pos(r), 0); }},
	    {"G3: α=β=γ≠0", Family::G3,
	     [](R& r) {
		     const Scalar a = random_nonzero(r);
		     return make(Family::G3, a, a, a, 0);
	     }},
	    {"G3: α=β>0, γ=0", Family::G3,
	     [](R& r) {
		     const Scalar a = pos(r);
		     return make(Family::G3, a, a, 0, 0);
	     }},
	    {"G3: β=−α<0, γ=0", Family::G3,
	     [](R& r) {
		     const Scalar a = pos(r);
		     return make(Family::G3, a, -a, 0, 0);
	     }},
	    {"G3: γ=−α<0, β=0", Family::G3,
	     [](R& r) {
		     const Scalar a = pos(r);
		     return make(Family::G3, a, 0, -a, 0);
	     }},
	    {"G3: α=γ>0, β=0", Family::G3,
	     [](R& r) {
		     const Scalar a = pos(r);
		     return make(Family::G3, a, 0, a, 0);
	     }},
	    {"G3: α=β=γ=0", Family::G3, [](R&) { return make(Family::G3, 0, 0, 0, 0); }},
	    {"G5: (β,γ)≠(0,0), α²+β²=γ²+δ²", Family::G5,
	     [](R& r) {
		     // The side conditions force δ=α and β=−γ on this branch.
		     const Scalar a = random_nonzero(r), g = random_nonzero(r);
		     return make(Family::G5, a, -g, g, a);
	     }},
	    {"G5: (β,γ)=(0,0)", Family::G5,
	     [](R& r) {
		     for (;;) {
			     const Scalar a = random_scalar(r), d = random_scalar(r);
			     if (a + d != 0) return make(Family::G5, a, 0, 0, d);
		     }
	     }},
	    {"G6: (β,γ)≠(0,0), α²−β²=δ²−γ²", Family::G6,
	     [](R& r) {
		     std::uniform_int_distribution<int> k(0, 3);
		     std::bernoulli_distribution coin(0.5);
		     for (;;) {
			     const Scalar a = random_scalar(r), d = random_scalar(r), t = random_nonzero(r);
			     FamilySpec s;
			     switch (k(r)) {
				     case 0: s = make(Family::G6, a, a, d, d); break;
				     case 1: s = make(Family::G6, a, -a, -d, d); break;
				     case 2: s = make(Family::G6, a, t * a, t * a, a); break;
				     default: s = make(Family::G6, 0, 0, coin(r) ? t : Scalar(-t), t); break;
			     }
			     const auto& p = s.params;
			     if (!violated_constraint(s) && (p.beta != 0 || p.gamma != 0) &&
			         p.alpha * p.alpha - p.beta * p.beta == p.delta * p.delta - p.gamma * p.gamma)
				     return s;
		     }
	     }},
	    {"G6: (β,γ)=(0,0)", Family::G6,
	     [](R& r) {
		     for (;;) {
			     const Scalar a = random_scalar(r), d = random_scalar(r);
			     if (a + d != 0) return make(Family::G6, a, 0, 0, d);
		     }
	     }},
	    {"G7: γ=0", Family::G7,
	     [](R& r) {
		     for (;;) {
			     const Scalar a = random_scalar(r, 0.1), b = random_scalar(r), d = random_scalar(r, 0.3);
			     if (a + d != 0) return make(Family::G7, a, b, 0, d);
		     }
	     }},
	};
	return b;
}

const std::vector<NegativeCase>& negative_cases() {
	using R = std::mt19937_64;
	static const std::vector<NegativeCase> n{
	    {"G1: β≠0", [](R& r) { return make(Family::G1, random_nonzero(r), random_nonzero(r), 0, 0); }},
	    {"G2: α≠0",
	     [](R& r) { return make(Family::G2, random_nonzero(r), random_scalar(r), random_nonzero(r), 0); }},
	    {"G4: (α,β)≠(0,η)",
	     [](R& r) {
		     std::bernoulli_distribution coin(0.5);
		     for (;;) {
			     const Scalar eta = coin(r) ? 1 : -1;
			     const Scalar a = random_scalar(r, 0.4);
			     const Scalar b = coin(r) ? eta : random_scalar(r);
			     if (a != 0 || b != eta) return make(Family::G4, a, b, 0, 0, eta);
		     }
	     }},
	    {"G7: γ≠0",
	     [](R& r) {
		     // αγ = 0 forces α = 0, then α+δ ≠ 0 forces δ ≠ 0.
		     return make(Family::G7, 0, random_scalar(r), random_nonzero(r), random_nonzero(r));
	     }},
	};
	return n;
}

bool matches_stated(const SolitonSolution& sol, const Classification& cl) {
	if (!cl.exists) return sol.status == SolutionStatus::none;
	if (cl.scalar_family) {
		if (sol.status != SolutionStatus::family || sol.freedom.size() != 1) return false;
		const auto& [dc, dd] = sol.freedom.front();
		const Mat id = Mat::identity(3);
		return dc != 0 && dd == id * Scalar(-dc) && sol.d == id * Scalar(-sol.c);
	}
	return sol.status == SolutionStatus::unique && cl.c && cl.d && sol.c == *cl.c && sol.d == *cl.d;
}

bool predicate_agrees(const SolitonSolution& sol, const Classification& cl) {
	return (sol.status != SolutionStatus::none) == cl.exists && sol.trivial == cl.trivial;
}

Mat paper_lie_derivative_g1(const Scalar& a, const Vec& y) {
	return Mat{{2 * a * (y[1] - y[2]), -a * y[0], a * y[0]},
	           {-a * y[0], 2 * a * y[2], -a * (y[1] + y[2])},
	           {a * y[0], -a * (y[1] + y[2]), 2 * a * y[1]}};
}

Mat paper_lie_derivative_g4(const FamilyParams& p, const Vec& y) {
	const Scalar &a = p.alpha, &b = p.beta, &e = p.eta;
	const Scalar x12 = (a - b) * y[2] - y[1];
	const Scalar x13 = -(a + 2 * e - b) * y[1] - y[2];
	return Mat{{0, x12, x13}, {x12, 2 * y[0], 2 * e * y[0]}, {x13, 2 * e * y[0], 2 * y[0]}};
}

Mat paper_flow_g1(const Scalar& a, const Scalar& t) {
	const Scalar s = t * a * a;
	return Mat{{1, 0, 0}, {0, 1 - s, s}, {0, -s, 1 + s}};
}

RealMat paper_flow_g2(const Scalar& g, double t) {
	const double e = std::exp(g.get_d() * g.get_d() * t);
	return RealMat{{1, 0, 0}, {0, e, 0}, {0, 0, e}};
}

bool left_invariant_matches_claim(const FamilySpec& spec, const LeftInvariantSoliton& sol) {
	const auto& p = spec.params;
	if (spec.family == Family::G1 && p.beta != 0)
		return sol.status == SolutionStatus::unique && sol.c == -p.beta * p.beta / 2 &&
		       sol.x == Vec{p.beta, -p.alpha, -p.alpha};
	if (spec.family == Family::G4 && p.alpha != 0) {
		if (sol.status != SolutionStatus::family || sol.freedom.size() != 1) return false;
		const auto& [dc, dx] = sol.freedom.front();
		return sol.c == -p.alpha * p.alpha / 2 && sol.x[0] == -p.eta * p.alpha / 2 && sol.x[2] == -p.eta * sol.x[1] &&
		       dc == 0 && dx[0] == 0 && dx[1] != 0 && dx[2] == -p.eta * dx[1];
	}
	if (spec.family == Family::G4 && p.alpha == 0 && p.beta != p.eta)
		return sol.status == SolutionStatus::unique && sol.c == 0 && sol.x == Vec{1 - p.eta * p.beta, 0, 0};
	throw ContractViolation("no left-invariant claim for " + show(spec));
}

bool VerifyReport::ok() const {
	return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify_paper(const VerifyOptions& opts) {
	VerifyReport rep;
	std::set<std::string> seen;
	std::mt19937_64 rng(opts.seed);

	auto add = [&rep](std::string name, bool ok, std::string detail) {
		rep.checks.push_back({std::move(name), ok, std::move(detail)});
	};

	// Lemma tables.
	for (Family f : kAllFamilies) {
		std::string first;
		int bad = 0;
		for (int i = 0; i < opts.lemma_draws; ++i) {
			const auto spec = random_spec(f, rng);
			const auto cmp = compare_lemma(spec, opts.lemma(spec));
			seen.insert(cmp.deviations.begin(), cmp.deviations.end());
			if (!cmp.ok()) {
				++bad;
				if (first.empty()) first = show(spec) + " " + cmp.mismatches.front();
			}
		}
		add("G" + std::to_string(static_cast<int>(f)) + " lemma", bad == 0,
		    bad ? std::to_string(bad) + " of " + std::to_string(opts.lemma_draws) + " draws differ; " + first
		        : std::to_string(opts.lemma_draws) + " draws");
	}

	// Derivation algebra dimensions, one point per lemma case.
	{
		struct Case {
			FamilySpec spec;
			std::size_t lemma_dim;
			std::string deviation;
		};
		const std::vector<Case> cases{
		    {make(Family::G1, 1, 1, 0, 0), 3, ""},        {make(Family::G1, 1, 0, 0, 0), 4, ""},
		    {make(Family::G2, 1, 2, 3, 0), 3, ""},        {make(Family::G2, 0, 2, 3, 0), 4, ""},
		    {make(Family::G3, 1, 0, 0, 0), 6, ""},        {make(Family::G3, 0, 0, -1, 0), 6, ""},
		    {make(Family::G3, 1, 2, 3, 0), 3, ""},        {make(Family::G3, 1, 2, 0, 0), 4, ""},
		    {make(Family::G3, 1, 0, 2, 0), 4, ""},        {make(Family::G3, 0, 0, 0, 0), 9, ""},
		    {make(Family::G4, 0, 1, 0, 0, 1), 6, ""},     {make(Family::G4, 0, 2, 0, 0, 1), 4, ""},
		    {make(Family::G4, 1, 1, 0, 0, 1), 4, ""},     {make(Family::G4, 1, 3, 0, 0, 1), 3, ""},
		    {make(Family::G5, 1, -2, 2, 1), 4, ""},       {make(Family::G5, 1, 0, 0, 2), 4, ""},
		    {make(Family::G5, 1, 0, 0, 1), 6, ""},        {make(Family::G6, 1, 2, 2, 1), 4, ""},
		    {make(Family::G6, 1, 0, 0, 2), 4, ""},        {make(Family::G6, 1, 0, 0, 1), 6, ""},
		    {make(Family::G7, 1, 1, 0, 2), 4, ""},        {make(Family::G7, 1, 1, 0, 1), 4, ""},
		    {make(Family::G7, 1, 0, 0, 1), 5, "g7.der_dim"},
		};
		std::string detail;
		bool ok = true;
		for (const auto& c : cases) {
			const auto dim = derivation_space(build(c.spec)).basis.size();
			if (dim == c.lemma_dim) continue;
			if (!c.deviation.empty() && dim == c.lemma_dim + 1) {
				seen.insert(c.deviation);
				continue;
			}
			ok = false;
			detail += show(c.spec) + " dim " + std::to_string(dim) + " vs " + std::to_string(c.lemma_dim) + "; ";
		}
		add("Derivation lemmas", ok, ok ? std::to_string(cases.size()) + " cases" : detail);
	}

	// Existence theorems, positive and negative.
	for (Family f : kAllFamilies) {
		int points = 0;
		std::string fail;
		for (const auto& br : theorem_branches()) {
			if (br.family != f) continue;
			for (int i = 0; i < opts.branch_points; ++i) {
				const auto spec = br.sample(rng);
				const auto cl = theorem_predicate(spec);
				const auto sol = solve_algebraic(build(spec));
				++points;
				if (cl.case_label != br.id || !matches_stated(sol, cl))
					if (fail.empty()) fail = br.id + " at " + show(spec);
			}
		}
		for (const auto& neg : negative_cases()) {
			if (neg.id.substr(0, 2) != "G" + std::to_string(static_cast<int>(f))) continue;
			for (int i = 0; i < opts.negative_draws; ++i) {
				const auto spec = neg.sample(rng);
				++points;
				if (solve_algebraic(build(spec)).status != SolutionStatus::none && fail.empty())
					fail = neg.id + " has a soliton at " + show(spec);
			}
		}
		add("G" + std::to_string(static_cast<int>(f)) + " theorem", fail.empty(),
		    fail.empty() ? std::to_string(points) + " points" : fail);
	}

	// Classification predicate against the solver.
	{
		int bad = 0;
		std::string first;
		for (Family f : kAllFamilies)
			for (int i = 0; i < opts.sweep_points; ++i) {
				const auto spec = random_spec(f, rng);
				if (!predicate_agrees(solve_algebraic(build(spec)), theorem_predicate(spec))) {
					++bad;
					if (first.empty()) first = show(spec);
				}
			}
		add("Classification predicate", bad == 0,
		    bad ? std::to_string(bad) + " disagreements, first " + first
		        : std::to_string(opts.sweep_points) + " points per family");
	}

	// Inner and outer derivations.
	{
		std::string fail;
		int checked = 0;
		for (const auto& br : theorem_branches()) {
			for (int i = 0; i < opts.branch_points; ++i) {
				const auto spec = br.sample(rng);
				const auto g = build(spec);
				const auto sol = solve_algebraic(g);
				if (sol.status == SolutionStatus::none || sol.d.is_zero()) continue;
				const auto& p = spec.params;
				bool ok = true;
				switch (br.family) {
					case Family::G1: {
						const Vec w{0, 2 * p.alpha, 2 * p.alpha};
						ok = sol.inner && *sol.inner == w && ad(g, w) == sol.d;
						break;
					}
					case Family::G7:
						if (p.delta != 0) {
							const Scalar s = p.alpha * (p.alpha - p.delta) / p.delta;
							ok = sol.inner.has_value() && ad(g, Vec{0, s, s}) == sol.d;
						} else {
							ok = !sol.inner.has_value();
						}
						break;
					default: ok = !sol.inner.has_value(); break;
				}
				++checked;
				if (!ok && fail.empty()) fail = br.id + " at " + show(spec);
			}
		}
		add("Inner/outer remarks", fail.empty(), fail.empty() ? std::to_string(checked) + " nonzero derivations" : fail);
	}

	// Left-invariant Ricci soliton vector fields.
	{
		std::string fail;
		for (int i = 0; i < opts.lemma_draws; ++i) {
			const auto spec = make(Family::G1, random_nonzero(rng), random_nonzero(rng), 0, 0);
			if (!left_invariant_matches_claim(spec, solve_left_invariant(build(spec))) && fail.empty())
				fail = show(spec);
		}
		add("G1 left-invariant remark", fail.empty(), fail.empty() ? "Y=βe1−α(e2+e3), c=−β²/2" : fail);
	}
	{
		std::string fail;
		int claim_ok = 0, deviating = 0;
		std::bernoulli_distribution coin(0.5);
		for (int i = 0; i < 2 * opts.lemma_draws; ++i) {
			const Scalar eta = coin(rng) ? 1 : -1;
			const Scalar a = random_nonzero(rng);
			const Scalar b = i % 2 ? a + eta : random_scalar(rng);
			const auto spec = make(Family::G4, a, b, 0, 0, eta);
			const auto sol = solve_left_invariant(build(spec));
			if (left_invariant_matches_claim(spec, sol)) {
				++claim_ok;
			} else if (b != a + eta && sol.status == SolutionStatus::none) {
				++deviating;
				seen.insert("g4.left_invariant");
			} else if (fail.empty()) {
				fail = show(spec);
			}
		}
		for (int i = 0; i < opts.lemma_draws; ++i) {
			const Scalar eta = coin(rng) ? 1 : -1;
			Scalar b = random_scalar(rng);
			if (b == eta) b += 1;
			const auto spec = make(Family::G4, 0, b, 0, 0, eta);
			if (left_invariant_matches_claim(spec, solve_left_invariant(build(spec))))
				++claim_ok;
			else if (fail.empty())
				fail = show(spec);
		}
		add("G4 left-invariant remark", fail.empty(),
		    fail.empty() ? std::to_string(claim_ok) + " match, " + std::to_string(deviating) + " known deviation"
		                 : fail);
	}

	// Printed L_Y g matrices.
	{
		bool ok = true;
		for (int i = 0; i < opts.lemma_draws && ok; ++i) {
			const Vec y{random_scalar(rng), random_scalar(rng), random_scalar(rng)};
			const auto s1 = random_spec(Family::G1, rng);
			const auto s4 = random_spec(Family::G4, rng);
			ok = lie_derivative_metric(build(s1), y) == paper_lie_derivative_g1(s1.params.alpha, y) &&
			     lie_derivative_metric(build(s4), y) == paper_lie_derivative_g4(s4.params, y);
		}
		add("L_Y g matrices", ok, "G1 and G4");
	}

	// Flow factors exp(tD/2).
	{
		bool ok = true;
		for (int i = 0; i < opts.branch_points && ok; ++i) {
			const Scalar a = random_nonzero(rng), t = random_scalar(rng);
			const auto e = flow_factor(solve_algebraic(build(make(Family::G1, a, 0, 0, 0))), t);
			ok = e.exact && *e.exact == paper_flow_g1(a, t);

			const Scalar g = random_nonzero(rng);
			const double tf = random_scalar(rng).get_d();
			const auto f2 = flow_factor(solve_algebraic(build(make(Family::G2, 0, 0, g, 0))), tf);
			const auto ref = paper_flow_g2(g, tf);
			for (std::size_t k = 0; k < 9; ++k) {
				const double x = f2.entries()[k], y = ref.entries()[k];
				if (std::fabs(x - y) > 1e-12 * std::max(1.0, std::fabs(y))) ok = false;
			}
		}
		add("Flow factors", ok, "G1 polynomial, G2 exponential");
	}

	rep.deviations.assign(seen.begin(), seen.end());
	return rep;
}

}  // namespace lorentz3
