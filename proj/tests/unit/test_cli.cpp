#include "kforge/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace kforge;

namespace
{

std::string const models = (std::filesystem::path(KFORGE_SOURCE_DIR) / "models").string();

struct Run
{
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::string model(char const *name) { return models + "/" + name + ".model"; }

} // namespace

TEST_SUITE("cli")
{
	TEST_CASE("exit codes")
	{
		CHECK(run({"validate", model("heis")}).code == exit_pass);
		CHECK(run({"validate", model("broken/jacobi")}).code == exit_failure);
		CHECK(run({"validate", model("broken/bad-scalar")}).code == exit_usage);
		CHECK(run({"validate", model("broken/bad-shape")}).code == exit_usage);
		CHECK(run({"validate", model("nonexistent")}).code == exit_usage);
		CHECK(run({"solve", "--order", "0", model("heis")}).code == exit_usage);
		CHECK(run({"frobnicate", model("heis")}).code == exit_usage);
		CHECK(run({}).code == exit_usage);
		CHECK(run({"equivariance", model("heis")}).code == exit_failure);
		CHECK(run({"equivariance", model("heis-badaction")}).code == exit_failure);
		CHECK(run({"solve", "--invariant-metric", model("heis")}).code == exit_failure);
		CHECK(run({"lemma31"}).code == exit_usage);
		CHECK(run({"lemma31", "--random", "--dim", "3"}).code == exit_usage);
		CHECK(run({"lemma31", models + "/lemma31/bad-j.lemma31"}).code == exit_failure);
	}

	TEST_CASE("solve text output")
	{
		auto r = run({"solve", "--order", "3", model("heis")});
		CHECK(r.code == exit_pass);
		CHECK(r.out.find("generator[0]: 2*t1*t2\n") != std::string::npos);
		CHECK(r.out.find("summary: Kuranishi space cut out by 1 equation(s) in 2 variable(s) through order 3") !=
		      std::string::npos);
		CHECK(r.out.rfind("status: pass\n") != std::string::npos);

		auto w = run({"solve", model("witheq")});
		CHECK(w.out.find("no obstructions; Kuranishi space is smooth of dimension 1") != std::string::npos);
		CHECK(w.out.find("order: 6") != std::string::npos);
	}

	TEST_CASE("JSON output")
	{
		auto r = run({"validate", "--json", model("broken/dsq")});
		CHECK(r.code == exit_failure);
		auto j = nlohmann::json::parse(r.out);
		CHECK(j["command"] == "validate");
		CHECK(j["status"] == "fail");
		CHECK(j["sha256"].get<std::string>().size() == 64);
		bool found = false;
		for (auto const &e : j["entries"])
			if (e.contains("check") && e["check"] == "dgla.d_squared")
			{
				found = true;
				CHECK(e["status"] == "fail");
			}
		CHECK(found);
	}

	TEST_CASE("group cap from the environment")
	{
		::setenv("KFORGE_MAX_GROUP", "5", 1);
		auto small = run({"validate", model("s3")});
		::setenv("KFORGE_MAX_GROUP", "6", 1);
		auto exact = run({"validate", model("s3")});
		::setenv("KFORGE_MAX_GROUP", "lots", 1);
		auto junk = run({"validate", model("s3")});
		::unsetenv("KFORGE_MAX_GROUP");
		CHECK(small.code == exit_failure);
		CHECK(small.out.find("check group.closure: FAIL") != std::string::npos);
		CHECK(exact.code == exit_pass);
		CHECK(exact.out.find("group: finite of order 6") != std::string::npos);
		CHECK(junk.code == exit_usage);
	}

	TEST_CASE("seeded random lemma31 runs are reproducible")
	{
		auto a = run({"lemma31", "--random", "--dim", "4", "--count", "5", "--seed", "9"});
		auto b = run({"lemma31", "--random", "--dim", "4", "--count", "5", "--seed", "9"});
		CHECK(a.code == exit_pass);
		CHECK(a.out == b.out);
		CHECK(a.out.find("5/5 conclusion holds among premise-satisfying instances") != std::string::npos);
	}

	TEST_CASE("complexify")
	{
		CHECK(run({"complexify", model("so3")}).code == exit_pass);
		CHECK(run({"complexify", model("so3-broken")}).code == exit_failure);
		CHECK(run({"complexify", model("heis")}).code == exit_failure);
	}
}
