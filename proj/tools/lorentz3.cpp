#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "lorentz3/report.hpp"
#include "lorentz3/verify.hpp"

using namespace lorentz3;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kVerifyFailure = 3;

void emit(const Report& r, const std::string& format) {
	if (format == "json")
		std::cout << to_json(r).dump(2) << "\n";
	else
		std::cout << to_text(r);
}

std::optional<Scalar> flow_time(const std::optional<std::string>& t) {
	if (!t) return std::nullopt;
	return parse_scalar(*t);
}

int run_verify() {
	const auto rep = verify_paper();
	for (const auto& c : rep.checks)
		std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
	std::cout << "known deviations (" << rep.deviations.size() << "):\n";
	for (const auto& id : rep.deviations)
		for (const auto& d : known_deviations())
			if (d.id == id) std::cout << "  " << d.id << ": " << d.description << "\n";
	std::cout << (rep.ok() ? "all checks passed" : "verification FAILED") << "\n";
	return rep.ok() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Algebraic Ricci solitons on three-dimensional Lorentzian Lie algebras"};
	app.require_subcommand(1);

	std::string format = "text";
	std::optional<std::string> flow;

	auto* fam = app.add_subcommand("family", "analyse a member of g1..g7");
	std::string fam_name;
	std::map<std::string, std::optional<std::string>> fam_params{
	    {"alpha", {}}, {"beta", {}}, {"gamma", {}}, {"delta", {}}, {"eta", {}}};
	fam->add_option("name", fam_name, "g1..g7")->required();
	for (auto& [k, v] : fam_params) fam->add_option("--" + k, v, "rational p/q or integer");
	fam->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
	fam->add_option("--flow", flow, "evaluate exp(tD/2) at this t");

	auto* custom = app.add_subcommand("custom", "analyse an algebra given as a JSON document");
	std::string input;
	custom->add_option("--input", input, "document path")->required();
	custom->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
	custom->add_option("--flow", flow, "evaluate exp(tD/2) at this t");

	auto* sw = app.add_subcommand("sweep", "classify a parameter grid to CSV");
	std::string sw_family, sw_grid, sw_out;
	unsigned sw_threads = 0;
	sw->add_option("--family", sw_family, "g1..g7")->required();
	sw->add_option("--grid", sw_grid, "KEY=lo:hi:n,...")->required();
	sw->add_option("--out", sw_out, "CSV path")->required();
	sw->add_option("--threads", sw_threads, "worker threads (0 = hardware)");

	app.add_subcommand("verify-paper", "reproduce the published tables and theorems");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? kOk : kInputError;
	}

	try {
		if (fam->parsed()) {
			FamilySpec spec{parse_family(fam_name), {}};
			const auto& keys = parameter_keys(spec.family);
			for (const auto& [k, v] : fam_params) {
				if (!v) continue;
				if (std::find(keys.begin(), keys.end(), k) == keys.end())
					throw InputError("--" + k + " does not apply to " + to_string(spec.family));
				param(spec.params, k) = parse_scalar(*v);
			}
			emit(make_report(build(spec), spec, flow_time(flow)), format);
			return kOk;
		}
		if (custom->parsed()) {
			emit(make_report(load_document(input), flow_time(flow)), format);
			return kOk;
		}
		if (sw->parsed()) {
			const Family f = parse_family(sw_family);
			const auto rows = sweep(f, parse_grid(sw_grid, f), sw_threads);
			std::ofstream out(sw_out);
			if (!out) throw InputError("cannot write '" + sw_out + "'");
			out << kSweepHeader << "\n";
			for (const auto& r : rows) out << r << "\n";
			std::cout << rows.size() << " rows written to " << sw_out << "\n";
			return kOk;
		}
		return run_verify();
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInputError;
	}
}
