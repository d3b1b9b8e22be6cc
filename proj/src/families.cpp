#include "lorentz3/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace lorentz3 {

std::string to_string(Family f) { return "g" + std::to_string(static_cast<int>(f)); }

Family parse_family(const std::string& name) {
	if (name.size() == 2 && (name[0] == 'g' || name[0] == 'G') && name[1] >= '1' && name[1] <= '7')
		return static_cast<Family>(name[1] - '0');
	throw InputError("unknown family '" + name + "' (expected g1..g7)");
}

const std::vector<std::string>& parameter_keys(Family f) {
	static const std::map<Family, std::vector<std::string>> keys{
	    {Family::G1, {"alpha", "beta"}},
	    {Family::G2, {"alpha", "beta", "gamma"}},
	    {Family::G3, {"alpha", "beta", "gamma"}},
	    {Family::G4, {"alpha", "beta", "eta"}},
	    {Family::G5, {"alpha", "beta", "gamma", "delta"}},
	    {Family::G6, {"alpha", "beta", "gamma", "delta"}},
	    {Family::G7, {"alpha", "beta", "gamma", "delta"}},
	};
	return keys.at(f);
}

Scalar& param(FamilyParams& p, const std::string& key) {
	if (key == "alpha") return p.alpha;
	if (key == "beta") return p.beta;
	if (key == "gamma") return p.gamma;
	if (key == "delta") return p.delta;
	if (key == "eta") return p.eta;
	throw InputError("unknown parameter '" + key + "'");
}

const Scalar& param(const FamilyParams& p, const std::string& key) {
	return param(const_cast<FamilyParams&>(p), key);
}

std::optional<std::string> violated_constraint(const FamilySpec& spec) {
	const auto& [a, b, g, d, eta] = spec.params;
	switch (spec.family) {
		case Family::G1:
			if (a == 0) return "α ≠ 0";
			break;
		case Family::G2:
			if (g == 0) return "γ ≠ 0";
			break;
		case Family::G3: break;
		case Family::G4:
			if (eta != 1 && eta != -1) return "η = ±1";
			break;
		case Family::G5:
			if (a + d == 0) return "α+δ ≠ 0";
			if (a * g + b * d != 0) return "αγ+βδ = 0";
			break;
		case Family::G6:
			if (a + d == 0) return "α+δ ≠ 0";
			if (a * g - b * d != 0) return "αγ−βδ = 0";
			break;
		case Family::G7:
			if (a + d == 0) return "α+δ ≠ 0";
			if (a * g != 0) return "αγ = 0";
			break;
	}
	return std::nullopt;
}

LieAlgebra3 build(const FamilySpec& spec) {
	if (auto v = violated_constraint(spec))
		throw InputError(to_string(spec.family) + " requires " + *v);
	const auto& [a, b, g, d, eta] = spec.params;
	const Scalar z = 0;
	switch (spec.family) {
		case Family::G1: return LieAlgebra3::from_brackets({a, z, -b}, {-a, -b, z}, {b, a, a});
		case Family::G2: return LieAlgebra3::from_brackets({z, g, -b}, {z, -b, -g}, {a, z, z});
		case Family::G3: return LieAlgebra3::from_brackets({z, z, -g}, {z, -b, z}, {a, z, z});
		case Family::G4:
			return LieAlgebra3::from_brackets({z, Scalar(-1), 2 * eta - b}, {z, -b, Scalar(1)}, {a, z, z});
		case Family::G5: return LieAlgebra3::from_brackets({z, z, z}, {a, b, z}, {g, d, z});
		case Family::G6: return LieAlgebra3::from_brackets({z, a, b}, {z, g, d}, {z, z, z});
		case Family::G7: return LieAlgebra3::from_brackets({-a, -b, -b}, {a, b, b}, {g, d, d});
	}
	throw ContractViolation("unreachable family");
}

namespace {

char sign_char(const Scalar& x) { return x > 0 ? '+' : (x < 0 ? '-' : '0'); }

std::string g3_pattern(const FamilyParams& p) {
	return {sign_char(p.alpha), sign_char(p.beta), sign_char(p.gamma)};
}

const std::map<std::string, std::string>& table1() {
	static const std::map<std::string, std::string> t{
	    {"+++", "O(1,2) or SL(2,ℝ)"}, {"+--", "O(1,2) or SL(2,ℝ)"}, {"++-", "SO(3) or SU(2)"},
	    {"++0", "E(2)"},              {"+0-", "E(2)"},              {"+-0", "E(1,1)"},
	    {"+0+", "E(1,1)"},            {"+00", "H₃"},                {"00-", "H₃"},
	    {"000", "ℝ⊕ℝ⊕ℝ"},
	};
	return t;
}

Mat diag3(const Scalar& a, const Scalar& b, const Scalar& c) { return Mat::diag({a, b, c}); }

void set_case(Classification& cl, std::string label, bool nontrivial, Scalar c, Mat d) {
	cl.exists = true;
	cl.case_label = std::move(label);
	cl.has_nontrivial = nontrivial;
	if (nontrivial) cl.branch = cl.case_label;
	cl.trivial = d.is_zero();
	cl.c = std::move(c);
	cl.d = std::move(d);
}

}  // namespace

std::string group_name(const FamilySpec& spec) {
	const auto& p = spec.params;
	switch (spec.family) {
		case Family::G1: return p.beta != 0 ? "O(1,2) or SL(2,ℝ)" : "E(1,1)";
		case Family::G2: return p.alpha != 0 ? "O(1,2) or SL(2,ℝ)" : "E(1,1)";
		case Family::G3: {
			const auto& t = table1();
			auto it = t.find(g3_pattern(p));
			return it == t.end() ? "unlisted" : it->second;
		}
		case Family::G4:
			if (p.beta != p.eta) return p.alpha != 0 ? "O(1,2) or SL(2,ℝ)" : "E(1,1)";
			if (p.alpha < 0) return "E(1,1)";
			if (p.alpha > 0) return "E(2)";
			return "H₃";
		default: return "non-unimodular (no table)";
	}
}

Classification theorem_predicate(const FamilySpec& spec) {
	Classification cl;
	cl.group_name = group_name(spec);
	const auto& [a, b, g, d, eta] = spec.params;
	switch (spec.family) {
		case Family::G1:
			if (b == 0) {
				const Scalar s = 2 * a * a;
				set_case(cl, "G1: β=0", true, 0, Mat{{0, 0, 0}, {0, -s, s}, {0, -s, s}});
			}
			break;
		case Family::G2:
			if (a == 0 && b == 0) set_case(cl, "G2: α=β=0", true, -2 * g * g, diag3(0, 2 * g * g, 2 * g * g));
			break;
		case Family::G3:
			cl.in_table_domain = table1().contains(g3_pattern(spec.params));
			if (a > 0 && b == 0 && g == 0)
				set_case(cl, "G3: α>0, β=γ=0", true, Scalar(3) * a * a / 2, diag3(-2 * a * a, -a * a, -a * a));
			else if (g < 0 && a == 0 && b == 0)
				set_case(cl, "G3: γ<0, α=β=0", true, Scalar(3) * g * g / 2, diag3(-g * g, -g * g, -2 * g * g));
			else if (a == b && b == g && a != 0)
				set_case(cl, "G3: α=β=γ≠0", false, -a * a / 2, Mat(3, 3));
			else if (a == b && a > 0 && g == 0)
				set_case(cl, "G3: α=β>0, γ=0", false, 0, Mat(3, 3));
			else if (b == -a && a > 0 && g == 0)
				set_case(cl, "G3: β=−α<0, γ=0", true, 2 * a * a, diag3(-2 * a * a, -2 * a * a, 0));
			else if (g == -a && a > 0 && b == 0)
				set_case(cl, "G3: γ=−α<0, β=0", true, 2 * a * a, diag3(-2 * a * a, 0, -2 * a * a));
			else if (a == g && a > 0 && b == 0)
				set_case(cl, "G3: α=γ>0, β=0", false, 0, Mat(3, 3));
			else if (a == 0 && b == 0 && g == 0) {
				cl.exists = true;
				cl.trivial = true;
				cl.scalar_family = true;
				cl.case_label = "G3: α=β=γ=0";
			}
			break;
		case Family::G4:
			if (a == 0 && b == eta) set_case(cl, "G4: α=0, β=η", false, 0, Mat(3, 3));
			break;
		case Family::G5:
			if ((b != 0 || g != 0) && a * a + b * b == g * g + d * d) {
				const Scalar x = a * d - b * g - a * a - b * b;
				set_case(cl, "G5: (β,γ)≠(0,0), α²+β²=γ²+δ²", true,
				         a * a + d * d + (b + g) * (b + g) / 2, diag3(x, x, 0));
			} else if (b == 0 && g == 0) {
				set_case(cl, "G5: (β,γ)=(0,0)", true, a * a + d * d, diag3(d * (a - d), a * (d - a), 0));
			}
			break;
		case Family::G6:
			if ((b != 0 || g != 0) && a * a - b * b == d * d - g * g) {
				const Scalar y = a * a - b * b + b * g - a * d;
				set_case(cl, "G6: (β,γ)≠(0,0), α²−β²=δ²−γ²", true,
				         -a * a - d * d + (b - g) * (b - g) / 2, diag3(0, y, y));
			} else if (b == 0 && g == 0) {
				set_case(cl, "G6: (β,γ)=(0,0)", true, -(a * a + d * d), diag3(0, d * (d - a), a * (a - d)));
			}
			break;
		case Family::G7:
			if (g == 0) {
				const Scalar s = a * (d - a);
				set_case(cl, "G7: γ=0", true, 0, Mat{{0, 0, 0}, {0, s, -s}, {0, s, -s}});
			}
			break;
	}
	return cl;
}

Scalar random_nonzero(std::mt19937_64& rng) {
	static constexpr std::array<int, 8> nums{-4, -3, -2, -1, 1, 2, 3, 4};
	static constexpr std::array<int, 4> dens{1, 1, 2, 3};
	std::uniform_int_distribution<std::size_t> n(0, nums.size() - 1), q(0, dens.size() - 1);
	Scalar x(nums[n(rng)], dens[q(rng)]);
	x.canonicalize();
	return x;
}

Scalar random_scalar(std::mt19937_64& rng, double zero_prob) {
	std::bernoulli_distribution zero(zero_prob);
	return zero(rng) ? Scalar(0) : random_nonzero(rng);
}

FamilySpec random_spec(Family f, std::mt19937_64& rng) {
	std::uniform_real_distribution<double> u(0.0, 1.0);
	auto pick = [&rng](std::initializer_list<Scalar> xs) {
		std::uniform_int_distribution<std::size_t> i(0, xs.size() - 1);
		return *(xs.begin() + i(rng));
	};
	for (;;) {
		FamilySpec s{f, {}};
		auto& [a, b, g, d, eta] = s.params;
		a = random_scalar(rng);
		b = random_scalar(rng);
		g = random_scalar(rng);
		d = random_scalar(rng);
		eta = u(rng) < 0.5 ? 1 : -1;
		const double k = u(rng);
		const Scalar t = random_scalar(rng);
		switch (f) {
			case Family::G1:
				if (k < 0.3) b = 0;
				break;
			case Family::G2:
				if (k < 0.3) a = b = 0;
				break;
			case Family::G3:
				if (k < 0.3) b = pick({a, -a, b});
				if (k > 0.6) g = pick({a, -a, b, g});
				if (!table1().contains(g3_pattern(s.params))) continue;
				break;
			case Family::G4:
				if (k < 0.4) a = 0;
				if (u(rng) < 0.4) b = eta;
				break;
			case Family::G5:
				if (k < 0.3) {
					b = -t * a;
					g = t * d;
				} else if (k < 0.6) {
					d = a;
					b = -t * a;
					g = t * a;
				} else if (k < 0.8) {
					b = g = 0;
				}
				break;
			case Family::G6:
				if (k < 0.3) {
					b = t * a;
					g = t * d;
				} else if (k < 0.5) {
					d = a;
					b = g = t * a;
				} else if (k < 0.6) {
					b = a;
					g = d;
				} else if (k < 0.7) {
					b = -a;
					g = -d;
				} else if (k < 0.85) {
					b = g = 0;
				}
				break;
			case Family::G7:
				if (k < 0.5) g = 0;
				if (u(rng) < 0.3) d = a;
				break;
		}
		// keys that do not enter the brackets keep their defaults
		const auto& keys = parameter_keys(f);
		const FamilyParams defaults;
		for (const char* k : {"alpha", "beta", "gamma", "delta", "eta"})
			if (std::find(keys.begin(), keys.end(), k) == keys.end()) param(s.params, k) = param(defaults, k);
		if (!violated_constraint(s)) return s;
	}
}

}  // namespace lorentz3
