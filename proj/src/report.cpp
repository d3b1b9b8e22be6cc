#include "lorentz3/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "lorentz3/verify.hpp"

namespace lorentz3 {

namespace {

const std::array<const char*, 3> kPairKeys{"12", "13", "23"};

Scalar scalar_from(const Json& j, const std::string& where) {
	if (j.is_string()) return parse_scalar(j.get<std::string>());
	if (j.is_number_integer()) return parse_scalar(std::to_string(j.get<long long>()));
	throw InputError(where + ": expected a rational string \"p/q\" or an integer");
}

Vec vec_from(const Json& j, const std::string& where) {
	if (!j.is_array() || j.size() != 3) throw InputError(where + ": expected an array of 3 rationals");
	Vec v;
	for (const auto& x : j) v.push_back(scalar_from(x, where));
	return v;
}

Json to_j(const Scalar& x) { return to_string(x); }

Json to_j(const Vec& v) {
	Json a = Json::array();
	for (const auto& x : v) a.push_back(to_string(x));
	return a;
}

Json to_j(const Mat& m) {
	Json a = Json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		Json row = Json::array();
		for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
		a.push_back(row);
	}
	return a;
}

Json to_j(const RealMat& m) {
	Json a = Json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		Json row = Json::array();
		for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
		a.push_back(row);
	}
	return a;
}

Scalar s_of(const Json& j) { return parse_scalar(j.get<std::string>()); }

Vec v_of(const Json& j) {
	Vec v;
	for (const auto& x : j) v.push_back(s_of(x));
	return v;
}

Mat m_of(const Json& j) {
	Mat m(j.size(), j.empty() ? 0 : j.front().size());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = s_of(j[i][k]);
	return m;
}

RealMat rm_of(const Json& j) {
	RealMat m(j.size(), j.empty() ? 0 : j.front().size());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = j[i][k].get<double>();
	return m;
}

template <class T, class F>
Json nullable(const std::optional<T>& x, F f) {
	return x ? f(*x) : Json(nullptr);
}

std::string show_vec(const Vec& v) {
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
	return s + ")";
}

std::string show_mat(const Mat& m, const std::string& indent) {
	std::vector<std::vector<std::string>> cells(m.rows());
	std::size_t w = 1;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) {
			cells[i].push_back(to_string(m(i, j)));
			w = std::max(w, cells[i].back().size());
		}
	std::string out;
	for (const auto& row : cells) {
		out += indent + "[";
		for (std::size_t j = 0; j < row.size(); ++j)
			out += (j ? " " : "") + std::string(w - row[j].size(), ' ') + row[j];
		out += "]\n";
	}
	return out;
}

}  // namespace

double round_sig15(double x) {
	if (x == 0 || !std::isfinite(x)) return x;
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.15g", x);
	return std::strtod(buf, nullptr);
}

AlgebraDocument parse_document(const Json& j) {
	if (!j.is_object()) throw InputError("document must be a JSON object");
	if (j.contains("signature")) {
		const auto& s = j.at("signature");
		if (!s.is_array() || s != Json::array({1, 1, -1}))
			throw InputError("signature must be [1,1,-1]");
	}
	const bool has_b = j.contains("brackets"), has_f = j.contains("family");
	if (has_b == has_f) throw InputError("document needs exactly one of \"brackets\" or \"family\"");

	AlgebraDocument doc;
	if (has_f) {
		const auto& f = j.at("family");
		if (!f.is_object() || !f.contains("name") || !f.at("name").is_string())
			throw InputError("family block needs a \"name\" (g1..g7)");
		FamilySpec spec{parse_family(f.at("name").get<std::string>()), {}};
		if (f.contains("params")) {
			if (!f.at("params").is_object()) throw InputError("family params must be an object");
			const auto& keys = parameter_keys(spec.family);
			for (const auto& [k, v] : f.at("params").items()) {
				if (std::find(keys.begin(), keys.end(), k) == keys.end())
					throw InputError("parameter '" + k + "' does not apply to " + to_string(spec.family));
				param(spec.params, k) = scalar_from(v, "params." + k);
			}
		}
		if (auto v = violated_constraint(spec)) throw InputError(to_string(spec.family) + " requires " + *v);
		doc.family = spec;
		return doc;
	}

	const auto& b = j.at("brackets");
	if (!b.is_object()) throw InputError("brackets must be an object keyed by \"12\", \"13\", \"23\"");
	std::array<std::array<std::optional<Vec>, 3>, 3> given;
	for (const auto& [k, v] : b.items()) {
		if (k.size() != 2 || k[0] < '1' || k[0] > '3' || k[1] < '1' || k[1] > '3')
			throw InputError("bad bracket key '" + k + "'");
		given[k[0] - '1'][k[1] - '1'] = vec_from(v, "brackets." + k);
	}
	const Vec zero(3, Scalar(0));
	for (int i = 0; i < 3; ++i)
		if (given[i][i] && *given[i][i] != zero)
			throw InputError("antisymmetry violated: [e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) +
			                 "] must be 0");
	std::array<Vec, 3> out;
	const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
	for (std::size_t p = 0; p < 3; ++p) {
		const auto [i, k] = pairs[p];
		const auto& fwd = given[i][k];
		const auto& rev = given[k][i];
		if (fwd && rev) {
			Vec neg = *rev;
			for (auto& x : neg) x = -x;
			if (neg != *fwd)
				throw InputError("antisymmetry violated: brackets." + std::string(kPairKeys[p]) + " != -brackets." +
				                 std::to_string(k + 1) + std::to_string(i + 1));
		}
		if (fwd) {
			out[p] = *fwd;
		} else if (rev) {
			out[p] = *rev;
			for (auto& x : out[p]) x = -x;
		} else {
			out[p] = zero;
		}
	}
	doc.brackets = out;
	return doc;
}

AlgebraDocument load_document(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InputError("cannot open '" + path + "'");
	Json j;
	try {
		in >> j;
	} catch (const Json::parse_error& e) {
		throw InputError("'" + path + "' is not valid JSON: " + e.what());
	}
	return parse_document(j);
}

LieAlgebra3 algebra_of(const AlgebraDocument& doc) {
	if (doc.family) return build(*doc.family);
	if (!doc.brackets) throw InputError("document has neither brackets nor family");
	const auto& b = *doc.brackets;
	auto g = LieAlgebra3::from_brackets(b[0], b[1], b[2]);
	if (!jacobi_check(g))
		throw InputError("Jacobi identity fails: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = " +
		                 show_vec(jacobi_residual(g)));
	return g;
}

Report make_report(const LieAlgebra3& g, const std::optional<FamilySpec>& family, const std::optional<Scalar>& flow_t) {
	if (!jacobi_check(g)) throw InputError("Jacobi identity fails: " + show_vec(jacobi_residual(g)));
	Report r;
	r.brackets = {g.bracket_basis(0, 1), g.bracket_basis(0, 2), g.bracket_basis(1, 2)};
	r.family = family;

	auto& a = r.analysis;
	a.unimodular = is_unimodular(g);
	a.connection = levi_civita(g);
	const auto curv = curvature(g, a.connection);
	for (int s = 0; s < 6; ++s) {
		const auto& [i, j, k, l] = kCurvatureSlots[s];
		a.curvature[s] = curv(i, j, k, l);
	}
	a.ricci = ricci(g, curv);
	const auto der = derivation_space(g);
	a.derivations = der.basis;
	a.soliton = solve_algebraic(g, a.ricci, der);
	a.left_invariant = solve_left_invariant(g, a.ricci);
	if (flow_t && a.soliton.status != SolutionStatus::none) {
		const auto e = flow_factor(a.soliton, *flow_t);
		FlowReport f{*flow_t, e.value, std::nullopt};
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j) f.matrix(i, j) = round_sig15(f.matrix(i, j));
		f.terms = nilpotent_exp_coefficients(a.soliton.d * Scalar(1, 2));
		a.flow = std::move(f);
	}

	if (family) {
		r.classification = theorem_predicate(*family);
		const auto cmp = compare_lemma(*family, paper_lemma(*family));
		std::set<std::string> ids(cmp.deviations.begin(), cmp.deviations.end());
		r.deviations.assign(ids.begin(), ids.end());
		r.deviations.insert(r.deviations.end(), cmp.mismatches.begin(), cmp.mismatches.end());
		if (family->family == Family::G4 && family->params.alpha != 0 &&
		    !left_invariant_matches_claim(*family, a.left_invariant))
			r.deviations.push_back("g4.left_invariant");
	}
	return r;
}

Report make_report(const AlgebraDocument& doc, const std::optional<Scalar>& flow_t) {
	return make_report(algebra_of(doc), doc.family, flow_t);
}

Json to_json(const Report& r) {
	Json j;
	Json alg;
	alg["signature"] = Json::array({1, 1, -1});
	for (int p = 0; p < 3; ++p) alg["brackets"][kPairKeys[p]] = to_j(r.brackets[p]);
	if (r.family) {
		alg["family"]["name"] = to_string(r.family->family);
		for (const auto& k : parameter_keys(r.family->family))
			alg["family"]["params"][k] = to_j(param(r.family->params, k));
	}
	j["algebra"] = alg;

	const auto& a = r.analysis;
	Json an;
	an["unimodular"] = a.unimodular;
	Json conn = Json::array();
	for (int i = 0; i < 3; ++i) {
		Json row = Json::array();
		for (int k = 0; k < 3; ++k) row.push_back(to_j(a.connection.nabla(i, k)));
		conn.push_back(row);
	}
	an["connection"] = conn;
	for (int s = 0; s < 6; ++s) an["curvature"][curvature_label(s)] = to_j(a.curvature[s]);
	an["ricci"] = {{"tensor", to_j(a.ricci.rho)}, {"operator", to_j(a.ricci.ric)}, {"scalar", to_j(a.ricci.scalar)}};
	Json basis = Json::array();
	for (const auto& d : a.derivations) basis.push_back(to_j(d));
	an["derivations"] = {{"dimension", a.derivations.size()}, {"basis", basis}};

	const auto& s = a.soliton;
	const bool has = s.status != SolutionStatus::none;
	Json sol;
	sol["status"] = to_string(s.status);
	sol["c"] = has ? to_j(s.c) : Json(nullptr);
	sol["D"] = has ? to_j(s.d) : Json(nullptr);
	Json fr = Json::array();
	for (const auto& [dc, dd] : s.freedom) fr.push_back({{"dc", to_j(dc)}, {"dD", to_j(dd)}});
	sol["freedom"] = fr;
	sol["trivial"] = s.trivial;
	sol["einstein_c"] = nullable(s.einstein_c, [](const Scalar& x) { return to_j(x); });
	sol["inner"] = has ? Json(s.inner.has_value()) : Json(nullptr);
	sol["inner_witness"] = nullable(s.inner, [](const Vec& x) { return to_j(x); });
	an["algebraic_soliton"] = sol;

	const auto& li = a.left_invariant;
	const bool li_has = li.status != SolutionStatus::none;
	Json lj;
	lj["status"] = to_string(li.status);
	lj["c"] = li_has ? to_j(li.c) : Json(nullptr);
	lj["x"] = li_has ? to_j(li.x) : Json(nullptr);
	Json lfr = Json::array();
	for (const auto& [dc, dx] : li.freedom) lfr.push_back({{"dc", to_j(dc)}, {"dx", to_j(dx)}});
	lj["freedom"] = lfr;
	an["left_invariant_soliton"] = lj;

	if (a.flow) {
		Json f;
		f["t"] = to_j(a.flow->t);
		f["matrix"] = to_j(a.flow->matrix);
		f["symbolic"] = a.flow->terms ? "polynomial" : "exponential";
		if (a.flow->terms) {
			Json terms = Json::array();
			for (const auto& m : *a.flow->terms) terms.push_back(to_j(m));
			f["terms"] = terms;
		}
		an["flow"] = f;
	}
	j["analysis"] = an;

	if (r.classification) {
		const auto& c = *r.classification;
		j["classification"] = {
		    {"has_nontrivial", c.has_nontrivial},
		    {"branch", c.branch},
		    {"case", c.case_label},
		    {"group", c.group_name},
		    {"exists", c.exists},
		    {"trivial", c.trivial},
		    {"c", nullable(c.c, [](const Scalar& x) { return to_j(x); })},
		    {"D", nullable(c.d, [](const Mat& x) { return to_j(x); })},
		    {"scalar_family", c.scalar_family},
		    {"in_table_domain", c.in_table_domain},
		};
	} else {
		j["classification"] = nullptr;
	}
	j["deviations"] = r.deviations;
	return j;
}

Report report_from_json(const Json& j) {
	Report r;
	const auto& alg = j.at("algebra");
	for (int p = 0; p < 3; ++p) r.brackets[p] = v_of(alg.at("brackets").at(kPairKeys[p]));
	if (alg.contains("family")) {
		FamilySpec spec{parse_family(alg["family"]["name"].get<std::string>()), {}};
		for (const auto& [k, v] : alg["family"]["params"].items()) param(spec.params, k) = s_of(v);
		r.family = spec;
	}

	const auto& an = j.at("analysis");
	auto& a = r.analysis;
	a.unimodular = an.at("unimodular").get<bool>();
	for (int i = 0; i < 3; ++i)
		for (int k = 0; k < 3; ++k) {
			const Vec v = v_of(an["connection"][i][k]);
			for (int m = 0; m < 3; ++m) a.connection(m, i, k) = v[m];
		}
	for (int s = 0; s < 6; ++s) a.curvature[s] = s_of(an["curvature"][curvature_label(s)]);
	a.ricci = {m_of(an["ricci"]["tensor"]), m_of(an["ricci"]["operator"]), s_of(an["ricci"]["scalar"])};
	for (const auto& d : an["derivations"]["basis"]) a.derivations.push_back(m_of(d));

	const auto& sol = an.at("algebraic_soliton");
	const std::string st = sol.at("status").get<std::string>();
	auto status_of = [](const std::string& s) {
		if (s == "unique") return SolutionStatus::unique;
		if (s == "family") return SolutionStatus::family;
		return SolutionStatus::none;
	};
	a.soliton.status = status_of(st);
	if (!sol["c"].is_null()) a.soliton.c = s_of(sol["c"]);
	if (!sol["D"].is_null()) a.soliton.d = m_of(sol["D"]);
	for (const auto& f : sol["freedom"]) a.soliton.freedom.emplace_back(s_of(f["dc"]), m_of(f["dD"]));
	a.soliton.trivial = sol["trivial"].get<bool>();
	if (!sol["einstein_c"].is_null()) a.soliton.einstein_c = s_of(sol["einstein_c"]);
	if (!sol["inner_witness"].is_null()) a.soliton.inner = v_of(sol["inner_witness"]);

	const auto& lj = an.at("left_invariant_soliton");
	a.left_invariant.status = status_of(lj.at("status").get<std::string>());
	if (!lj["c"].is_null()) a.left_invariant.c = s_of(lj["c"]);
	if (!lj["x"].is_null()) a.left_invariant.x = v_of(lj["x"]);
	for (const auto& f : lj["freedom"]) a.left_invariant.freedom.emplace_back(s_of(f["dc"]), v_of(f["dx"]));

	if (an.contains("flow")) {
		const auto& f = an["flow"];
		FlowReport fr{s_of(f["t"]), rm_of(f["matrix"]), std::nullopt};
		if (f.contains("terms")) {
			std::vector<Mat> terms;
			for (const auto& m : f["terms"]) terms.push_back(m_of(m));
			fr.terms = std::move(terms);
		}
		a.flow = std::move(fr);
	}

	if (!j.at("classification").is_null()) {
		const auto& c = j["classification"];
		Classification cl;
		cl.has_nontrivial = c["has_nontrivial"].get<bool>();
		cl.branch = c["branch"].get<std::string>();
		cl.case_label = c["case"].get<std::string>();
		cl.group_name = c["group"].get<std::string>();
		cl.exists = c["exists"].get<bool>();
		cl.trivial = c["trivial"].get<bool>();
		if (!c["c"].is_null()) cl.c = s_of(c["c"]);
		if (!c["D"].is_null()) cl.d = m_of(c["D"]);
		cl.scalar_family = c["scalar_family"].get<bool>();
		cl.in_table_domain = c["in_table_domain"].get<bool>();
		r.classification = std::move(cl);
	}
	r.deviations = j.at("deviations").get<std::vector<std::string>>();
	return r;
}

std::string to_text(const Report& r) {
	std::ostringstream o;
	const auto& a = r.analysis;
	if (r.family) {
		o << "algebra " << to_string(r.family->family);
		for (const auto& k : parameter_keys(r.family->family))
			o << " " << k << "=" << to_string(param(r.family->params, k));
		o << "\n";
	} else {
		o << "algebra (custom)\n";
	}
	for (int p = 0; p < 3; ++p)
		o << "  [e" << kPairKeys[p][0] << ",e" << kPairKeys[p][1] << "] = " << show_vec(r.brackets[p]) << "\n";
	o << "unimodular: " << (a.unimodular ? "yes" : "no") << "\n";
	o << "connection (nabla_ei ej):\n";
	for (int i = 0; i < 3; ++i)
		for (int k = 0; k < 3; ++k)
			o << "  e" << i + 1 << " e" << k + 1 << ": " << show_vec(a.connection.nabla(i, k)) << "\n";
	o << "curvature:";
	for (int s = 0; s < 6; ++s) o << " " << curvature_label(s) << "=" << to_string(a.curvature[s]);
	o << "\nricci operator:\n" << show_mat(a.ricci.ric, "  ");
	o << "scalar curvature: " << to_string(a.ricci.scalar) << "\n";
	o << "derivation algebra dimension: " << a.derivations.size() << "\n";

	const auto& s = a.soliton;
	o << "algebraic soliton: " << to_string(s.status);
	if (s.status != SolutionStatus::none) {
		o << ", c = " << to_string(s.c) << (s.inner ? ", inner (x = " + show_vec(*s.inner) + ")" : ", outer") << "\n";
		o << show_mat(s.d, "  D ");
		for (const auto& [dc, dd] : s.freedom) o << "  free direction dc = " << to_string(dc) << "\n" << show_mat(dd, "  dD ");
	} else {
		o << "\n";
	}
	o << "einstein: " << (s.einstein_c ? "yes, c = " + to_string(*s.einstein_c) : std::string("no")) << "\n";

	const auto& li = a.left_invariant;
	o << "left-invariant soliton: " << to_string(li.status);
	if (li.status != SolutionStatus::none) {
		o << ", c = " << to_string(li.c) << ", x = " << show_vec(li.x);
		for (const auto& [dc, dx] : li.freedom) o << ", free (dc = " << to_string(dc) << ", dx = " << show_vec(dx) << ")";
	}
	o << "\n";

	if (a.flow) {
		o << "flow exp(tD/2) at t = " << to_string(a.flow->t) << (a.flow->terms ? " (polynomial in t)" : "") << ":\n";
		for (std::size_t i = 0; i < 3; ++i) {
			char buf[128];
			std::snprintf(buf, sizeof buf, "  [%.15g %.15g %.15g]\n", a.flow->matrix(i, 0), a.flow->matrix(i, 1),
			              a.flow->matrix(i, 2));
			o << buf;
		}
	}
	if (r.classification) {
		const auto& c = *r.classification;
		o << "classification: " << (c.has_nontrivial ? "non-trivial soliton, " + c.branch : std::string("no non-trivial bullet"))
		  << "\n";
		if (!c.case_label.empty()) o << "theorem case: " << c.case_label << "\n";
		o << "group: " << c.group_name << "\n";
	}
	if (!r.deviations.empty()) {
		o << "deviations from printed tables:\n";
		for (const auto& d : r.deviations) o << "  " << d << "\n";
	}
	return o.str();
}

std::vector<GridAxis> parse_grid(const std::string& spec, Family f) {
	std::vector<GridAxis> axes;
	const auto& keys = parameter_keys(f);
	std::stringstream ss(spec);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (item.empty()) continue;
		const auto eq = item.find('=');
		if (eq == std::string::npos) throw InputError("grid entry '" + item + "' is not KEY=lo:hi:n");
		GridAxis ax;
		ax.key = item.substr(0, eq);
		if (std::find(keys.begin(), keys.end(), ax.key) == keys.end())
			throw InputError("grid key '" + ax.key + "' does not apply to " + to_string(f));
		for (const auto& other : axes)
			if (other.key == ax.key) throw InputError("grid key '" + ax.key + "' repeated");
		std::vector<std::string> parts;
		std::stringstream rs(item.substr(eq + 1));
		std::string part;
		while (std::getline(rs, part, ':')) parts.push_back(part);
		if (parts.size() != 3) throw InputError("grid entry '" + item + "' is not KEY=lo:hi:n");
		ax.lo = parse_scalar(parts[0]);
		ax.hi = parse_scalar(parts[1]);
		const Scalar n = parse_scalar(parts[2]);
		if (n.get_den() != 1 || n < 1) throw InputError("grid count in '" + item + "' must be a positive integer");
		if (n == 1 && ax.lo != ax.hi) throw InputError("grid entry '" + item + "' has n=1 but lo != hi");
		ax.n = static_cast<int>(n.get_num().get_si());
		axes.push_back(std::move(ax));
	}
	if (axes.empty()) throw InputError("empty grid");
	return axes;
}

std::vector<std::string> sweep(Family f, const std::vector<GridAxis>& grid, unsigned threads) {
	if (grid.empty()) throw InputError("empty grid");
	std::vector<FamilySpec> points{FamilySpec{f, {}}};
	for (const auto& ax : grid) {
		std::vector<FamilySpec> next;
		for (const auto& p : points)
			for (int i = 0; i < ax.n; ++i) {
				FamilySpec q = p;
				param(q.params, ax.key) = ax.n == 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * i / (ax.n - 1);
				next.push_back(std::move(q));
			}
		points = std::move(next);
	}
	std::sort(points.begin(), points.end(), [](const FamilySpec& x, const FamilySpec& y) {
		const auto& a = x.params;
		const auto& b = y.params;
		for (const auto& [u, v] : {std::pair{&a.alpha, &b.alpha}, std::pair{&a.beta, &b.beta},
		                           std::pair{&a.gamma, &b.gamma}, std::pair{&a.delta, &b.delta},
		                           std::pair{&a.eta, &b.eta}})
			if (*u != *v) return *u < *v;
		return false;
	});
	points.erase(std::unique(points.begin(), points.end()), points.end());

	const auto& keys = parameter_keys(f);
	auto row = [&](const FamilySpec& spec) {
		std::string line = to_string(f);
		for (const char* k : {"alpha", "beta", "gamma", "delta", "eta"}) {
			line += ",";
			if (std::find(keys.begin(), keys.end(), k) != keys.end()) line += to_string(param(spec.params, k));
		}
		if (violated_constraint(spec)) return line + ",,invalid,,,";
		const auto g = build(spec);
		const auto sol = solve_algebraic(g);
		const auto cl = theorem_predicate(spec);
		line += is_unimodular(g) ? ",true," : ",false,";
		line += to_string(sol.status) + ",";
		if (sol.status != SolutionStatus::none) line += to_string(sol.c);
		line += sol.trivial ? ",true," : ",false,";
		line += predicate_agrees(sol, cl) ? "true" : "false";
		return line;
	};

	std::vector<std::string> out(points.size());
	if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size())));
	std::atomic<std::size_t> next{0};
	{
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < threads; ++t)
			pool.emplace_back([&] {
				for (std::size_t i; (i = next.fetch_add(1)) < points.size();) out[i] = row(points[i]);
			});
	}
	return out;
}

}  // namespace lorentz3
