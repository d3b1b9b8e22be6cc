// Drives the lorentz3 binary through popen and checks exit codes and output.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "lorentz3/report.hpp"

using namespace lorentz3;

namespace {

struct Run {
	int code = -1;
	std::string out;
};

Run run(const std::string& args) {
	const std::string cmd = std::string(LORENTZ3_BIN) + " " + args + " 2>&1";
	Run r;
	FILE* p = popen(cmd.c_str(), "r");
	REQUIRE(p != nullptr);
	char buf[4096];
	for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
	const int status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body = {}) {
	const auto dir = std::filesystem::temp_directory_path() / "lorentz3_cli_test";
	std::filesystem::create_directories(dir);
	const auto path = dir / name;
	if (!body.empty()) std::ofstream(path) << body;
	return path;
}

}  // namespace

TEST_CASE("family g1 reports the inner c = 0 soliton") {
	const auto r = run("family g1 --alpha 1 --beta 0 --format json");
	REQUIRE(r.code == 0);
	const Json j = Json::parse(r.out);
	const auto& s = j.at("analysis").at("algebraic_soliton");
	CHECK(s.at("status") == "unique");
	CHECK(s.at("c") == "0");
	CHECK(s.at("inner") == true);
	CHECK(j.at("classification").at("has_nontrivial") == true);
}

TEST_CASE("family g4 alpha=1 beta=0 has neither kind of soliton") {
	const auto r = run("family g4 --alpha 1 --beta 0 --eta 1 --format json");
	REQUIRE(r.code == 0);
	const Json j = Json::parse(r.out);
	CHECK(j.at("analysis").at("algebraic_soliton").at("status") == "none");
	CHECK(j.at("analysis").at("left_invariant_soliton").at("status") == "none");
	CHECK(j.at("deviations").dump().find("g4.left_invariant") != std::string::npos);
}

TEST_CASE("family g3 without parameters is the abelian algebra") {
	const auto r = run("family g3 --format json");
	REQUIRE(r.code == 0);
	const Json j = Json::parse(r.out);
	CHECK(j.at("analysis").at("algebraic_soliton").at("trivial") == true);
	CHECK(j.at("analysis").at("algebraic_soliton").at("einstein_c") == "0");
	CHECK(run("family g3").code == 0);
}

TEST_CASE("invalid parameters exit nonzero naming the constraint") {
	const auto r = run("family g1 --alpha 0");
	CHECK(r.code == 2);
	CHECK(r.out.find("α ≠ 0") != std::string::npos);
	CHECK(run("family g1 --alpha 1 --eta 1").code == 2);
	CHECK(run("family g9").code == 2);
	CHECK(run("family g1 --alpha 1.5").code == 2);
	CHECK(run("family g1 --alpha 1 --format xml").code == 2);
	CHECK(run("").code == 2);
	CHECK(run("--help").code == 0);
}

TEST_CASE("custom documents") {
	const auto doc = temp_file("g2.json", R"({"brackets": {"12": ["0","1","0"], "13": ["0","0","-1"]}})");
	const auto r = run("custom --input " + doc.string() + " --format json");
	REQUIRE(r.code == 0);
	const auto fam = run("family g2 --gamma 1 --format json");
	REQUIRE(fam.code == 0);
	CHECK(Json::parse(r.out).at("analysis") == Json::parse(fam.out).at("analysis"));

	const auto bad = temp_file("jacobi.json", R"({"brackets": {"12": ["1","0","0"], "13": ["0","1","0"]}})");
	const auto e = run("custom --input " + bad.string());
	CHECK(e.code == 2);
	CHECK(e.out.find("Jacobi") != std::string::npos);

	CHECK(run("custom --input /nonexistent/doc.json").code == 2);
	const auto junk = temp_file("junk.json", "{not json");
	CHECK(run("custom --input " + junk.string()).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
	const auto a = run("family g5 --alpha 1 --delta 2 --format json --flow 1/2");
	const auto b = run("family g5 --alpha 1 --delta 2 --format json --flow 1/2");
	CHECK(a.code == 0);
	CHECK(a.out == b.out);
	CHECK(run("family g6 --alpha 1 --beta 2 --gamma 2 --delta 1").out ==
	      run("family g6 --alpha 1 --beta 2 --gamma 2 --delta 1").out);
}

TEST_CASE("sweep writes a CSV") {
	const auto out = temp_file("g1.csv");
	const auto r = run("sweep --family g1 --grid alpha=1:1:1,beta=-1:1:3 --out " + out.string());
	REQUIRE(r.code == 0);
	std::ifstream in(out);
	std::string line;
	std::getline(in, line);
	CHECK(line == kSweepHeader);
	int rows = 0;
	while (std::getline(in, line)) ++rows;
	CHECK(rows == 3);

	CHECK(run("sweep --family g1 --grid '' --out " + out.string()).code == 2);
	CHECK(run("sweep --family g1 --grid gamma=0:1:2 --out " + out.string()).code == 2);
}

TEST_CASE("verify-paper succeeds and lists the deviations") {
	const auto r = run("verify-paper");
	CHECK(r.code == 0);
	CHECK(r.out.find("FAIL") == std::string::npos);
	CHECK(r.out.find("known deviations (4)") != std::string::npos);
	CHECK(r.out.find("all checks passed") != std::string::npos);
}
