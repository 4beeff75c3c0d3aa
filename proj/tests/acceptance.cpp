// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include "kforge/cli.hpp"
#include "kforge/cstruct.hpp"
#include "kforge/kuranishi.hpp"
#include "kforge/model.hpp"
#include "kforge/report.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace kforge;

namespace
{

fs::path const root = KFORGE_SOURCE_DIR;

struct Outcome
{
	bool passed = true;
	std::string detail;

	void fail(std::string const &why)
	{
		if (passed)
			detail = why;
		passed = false;
	}
};

std::vector<fs::path> bundled_models()
{
	std::vector<fs::path> out;
	for (auto const &e : fs::directory_iterator(root / "models"))
		if (e.path().extension() == ".model")
			out.push_back(e.path());
	std::sort(out.begin(), out.end());
	return out;
}

std::string stem(fs::path const &p)
{
	return p.stem().string();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GroupAction action_of(Model const &m)
{
	if (auto const *f = std::get_if<FiniteGenerators>(&*m.group))
		return close_group(f->generators);
	return std::get<TorusAction>(*m.group);
}

// 1. DGLA axioms on the corpus, and the injected violation of each broken variant
Outcome criterion_dgla()
{
	Outcome out;
	for (auto const &path : bundled_models())
	{
		auto t0 = std::chrono::steady_clock::now();
		auto report = validate_dgla(load_model(path).dgla);
		if (!report.ok())
			out.fail(stem(path) + " fails validation");
		if (seconds_since(t0) >= 1.0)
			out.fail(stem(path) + " took longer than 1 s");
	}

	struct Broken
	{
		char const *file;
		char const *check;
		char const *witness;
	};
	Broken const broken[] = {
	    {"heis-leibniz", "leibniz", "(a, e2)"},
	    {"dsq", "d_squared", "d(d(a))"},
	    {"jacobi", "jacobi", "(x, y, z)"},
	    {"antisym", "antisymmetry", "(a, a)"},
	};
	for (auto const &b : broken)
	{
		auto t0 = std::chrono::steady_clock::now();
		auto report = validate_dgla(load_model(root / "models" / "broken" / (std::string(b.file) + ".model")).dgla);
		for (auto const &c : report.checks)
		{
			bool injected = c.name == b.check;
			if (injected && (c.passed || c.witness.find(b.witness) == std::string::npos))
				out.fail(std::string(b.file) + ": " + b.check + " not pinpointed (" + c.witness + ")");
			if (!injected && !c.passed)
				out.fail(std::string(b.file) + ": unexpected failure of " + c.name);
		}
		if (seconds_since(t0) >= 1.0)
			out.fail(std::string(b.file) + " took longer than 1 s");
	}
	if (out.passed)
		out.detail = std::to_string(bundled_models().size()) + " models valid, 4 broken variants pinpointed";
	return out;
}

// 2. Hodge decomposition identities on random elements and as operator identities
Outcome criterion_hodge()
{
	Outcome out;
	auto t0 = std::chrono::steady_clock::now();
	size_t samples = 0;
	for (auto const &path : bundled_models())
	{
		auto model = load_model(path);
		auto const &D = model.dgla;
		auto hodge = hodge_data(D, model.metric_or_identity());
		ExactRandom rng(2024);
		std::string name = stem(path);
		for (int p = 0; p <= D.max_degree(); ++p)
		{
			auto const &H = hodge.H[p];
			auto const &G = hodge.G[p];
			auto const &box = hodge.box[p];
			auto const &M = hodge.metric[p];
			for (int k = 0; k < 100; ++k)
			{
				Vector v = rng.vector(D.dim(p));
				Vector w = rng.vector(D.dim(p));
				if (H * v + box * (G * v) != v)
					out.fail(name + ": v != Hv + box G v in degree " + std::to_string(p));
				if (!inner(H * v, M, box * (G * w)).is_zero())
					out.fail(name + ": <Hv, box G w> != 0 in degree " + std::to_string(p));
				++samples;
			}
			Matrix zero(D.dim(p), D.dim(p));
			if (H * H != H)
				out.fail(name + ": H^2 != H");
			if (H * G != zero || G * H != zero)
				out.fail(name + ": HG or GH nonzero");
			if (p < D.max_degree() && D.d(p) * G != hodge.G[p + 1] * D.d(p))
				out.fail(name + ": dG != Gd in degree " + std::to_string(p));
			if (p > 0 && hodge.dstar[p] * G != hodge.G[p - 1] * hodge.dstar[p])
				out.fail(name + ": d*G != Gd* in degree " + std::to_string(p));
			size_t expected = oracle::cohomology_dim(D, p);
			if (hodge.harmonic_dim(p) != expected)
				out.fail(name + ": harmonic dimension " + std::to_string(hodge.harmonic_dim(p)) +
				         " differs from rank-nullity " + std::to_string(expected) + " in degree " +
				         std::to_string(p));
		}
	}
	double t = seconds_since(t0);
	if (t >= 5.0)
		out.fail("took " + std::to_string(t) + " s");
	if (out.passed)
		out.detail = std::to_string(samples) + " random elements";
	return out;
}

// 3. closed forms
Outcome criterion_closed_forms()
{
	Outcome out;
	std::vector<DGLA> abelian = {load_model(root / "models" / "abelian.model").dgla,
	                             load_model(root / "models" / "witheq.model").dgla,
	                             load_model(root / "models" / "heis.model").dgla.with_scaled_bracket(0),
	                             load_model(root / "models" / "iwasawa.model").dgla.with_scaled_bracket(0)};
	for (size_t k = 0; k < abelian.size(); ++k)
	{
		auto hodge = hodge_data(abelian[k], HermitianMetric::identity(abelian[k].space()));
		for (unsigned N = 1; N <= 8; ++N)
		{
			auto sol = solve(abelian[k], hodge, N);
			if (sol.phi != linear_series(abelian[k], hodge, N) || !sol.obstruction.is_zero())
				out.fail("abelian model " + std::to_string(k) + " at order " + std::to_string(N));
		}
	}

	auto heis = load_model(root / "models" / "heis.model").dgla;
	auto hh = hodge_data(heis, HermitianMetric::identity(heis.space()));
	auto sol = solve(heis, hh, 3);
	if (format_polynomial(sol.generators, 0) != "2*t1*t2" || sol.generators.dim() != 1)
		out.fail("heis generator is " + format_polynomial(sol.generators, 0));
	ExactRandom rng(3);
	for (int k = 0; k < 20; ++k)
	{
		Vector t = rng.vector(2);
		if (sol.generators.evaluate(t) != oracle::obstruction_at(heis, hh, t))
			out.fail("heis generator disagrees with direct expansion");
	}

	auto witheq = load_model(root / "models" / "witheq.model").dgla;
	auto wh = hodge_data(witheq, HermitianMetric::identity(witheq.space()));
	auto ws = solve(witheq, wh, 4);
	PowerSeries expected(1, 1, 2, 4);
	expected.add({1}, {Scalar(0), Scalar(1)});
	if (ws.phi != expected || !ws.generators.is_zero() || wh.harmonic_dims() != std::vector<size_t>{0, 1, 0})
		out.fail("witheq is not phi = t1 e2 without obstructions");
	if (out.passed)
		out.detail = "abelian orders 1..8, heis 2*t1*t2, witheq t1*e2";
	return out;
}

// 4. residual identities at order 6
Outcome criterion_residuals()
{
	Outcome out;
	auto t0 = std::chrono::steady_clock::now();
	size_t checks = 0;
	for (auto const &path : bundled_models())
	{
		auto model = load_model(path);
		auto hodge = hodge_data(model.dgla, model.metric_or_identity());
		auto sol = solve(model.dgla, hodge, 6);
		for (auto const &c : residual_report(model.dgla, hodge, sol).checks)
		{
			++checks;
			if (!c.passed)
				out.fail(stem(path) + ": " + c.name + " " + c.witness);
		}
	}
	double t = seconds_since(t0);
	if (t >= 30.0)
		out.fail("took " + std::to_string(t) + " s");
	if (out.passed)
		out.detail = std::to_string(checks) + " identities hold";
	return out;
}

// 5. equivariance with averaged metrics, plus a non-invariant metric as negative control
Outcome criterion_equivariance()
{
	Outcome out;
	auto t0 = std::chrono::steady_clock::now();
	for (char const *name : {"heis-swap", "s3", "iwasawa-z4", "heis-torus"})
	{
		auto model = load_model(root / "models" / (std::string(name) + ".model"));
		auto const &D = model.dgla;
		auto action = action_of(model);
		auto metric = average_metric(model.metric_or_identity(), action);
		auto hodge = hodge_data(D, metric);
		auto sol = solve(D, hodge, 5);
		auto ops = check_operator_equivariance(action, hodge);
		auto eq = equivariance_report(D, hodge, action, sol);
		for (auto const *r : {&ops, &eq})
			for (auto const &c : r->checks)
				if (!c.passed)
					out.fail(std::string(name) + ": " + c.name + " " + c.witness);
		if (eq.checks.size() != 2)
			out.fail(std::string(name) + ": E1/E2 not evaluated");
	}

	for (char const *name : {"witheq-flip", "iwasawa-z4"})
	{
		auto model = load_model(root / "models" / (std::string(name) + ".model"));
		auto action = action_of(model);
		auto raw = hodge_data(model.dgla, model.metric_or_identity());
		auto const *green = check_operator_equivariance(action, raw).find("green_equivariant");
		if (!green || green->passed)
			out.fail(std::string(name) + ": non-invariant metric does not break G-equivariance");
		auto avg = hodge_data(model.dgla, average_metric(model.metric_or_identity(), action));
		if (!check_operator_equivariance(action, avg).find("green_equivariant")->passed)
			out.fail(std::string(name) + ": averaged metric does not restore G-equivariance");
	}
	double t = seconds_since(t0);
	if (t >= 30.0)
		out.fail("took " + std::to_string(t) + " s");
	if (out.passed)
		out.detail = "heis-swap, s3, iwasawa-z4 through order 5; torus weights; negative control fails as expected";
	return out;
}

// 6. Weyl averaging
Outcome criterion_averaging()
{
	Outcome out;
	size_t actions = 0;
	for (auto const &path : bundled_models())
	{
		auto model = load_model(path);
		if (!model.group || !validate_action(model.dgla, action_of(model)).ok())
			continue;
		++actions;
		auto action = action_of(model);
		auto const &space = model.dgla.space();
		ExactRandom rng(11);
		HermitianMetric random_metric;
		for (int p = 0; p <= space.max_degree(); ++p)
		{
			Matrix a = rng.matrix(space.dim(p), space.dim(p), 3, 2, true);
			random_metric.blocks.push_back(a.conj_transpose() * a + Matrix::identity(space.dim(p)));
		}
		for (auto const &base : {model.metric_or_identity(), random_metric})
		{
			auto avg = average_metric(base, action);
			if (!check_metric_invariance(avg, action).ok())
				out.fail(stem(path) + ": averaged metric not invariant");
			if (!validate_metric(space, avg).ok())
				out.fail(stem(path) + ": averaged metric not positive definite");
			if (average_metric(avg, action) != avg)
				out.fail(stem(path) + ": averaging not idempotent");
			if (!oracle::invariant_by_generators(avg, model))
				out.fail(stem(path) + ": generator oracle rejects averaged metric");
		}
	}
	if (out.passed)
		out.detail = std::to_string(actions) + " actions, two base metrics each";
	return out;
}

// 7. complexification
Outcome criterion_complexification()
{
	Outcome out;
	for (char const *name : {"u1", "so3"})
	{
		auto model = load_model(root / "models" / (std::string(name) + ".model"));
		auto const &L = *model.lie;
		auto C = complexify_lie_action(L);
		if (!check_homomorphism(C, 5, 32).ok())
			out.fail(std::string(name) + ": complex homomorphism check fails");
		if (!oracle::complex_homomorphism(C, 99))
			out.fail(std::string(name) + ": oracle finds a non-homomorphic pair");
		ExactRandom rng(17);
		for (int k = 0; k < 20; ++k)
		{
			Vector x = rng.vector(L.dim, 5, 4, false);
			if (C.rho(x) != L.rho(x))
				out.fail(std::string(name) + ": restriction to real scalars differs");
		}
		auto hodge = hodge_data(model.dgla, model.metric_or_identity());
		auto chain = check_derivation_equivariance(C, model.dgla, hodge);
		if (!chain.ok())
			out.fail(std::string(name) + ": derivation chain fails");
	}
	if (out.passed)
		out.detail = "u1 and so3";
	return out;
}

// 8. the linear-algebra lemma on complex structures
Outcome criterion_lemma()
{
	Outcome out;
	auto t0 = std::chrono::steady_clock::now();
	for (size_t dim : {2, 4, 6})
	{
		ExactRandom rng(8 + dim);
		size_t premise = 0;
		for (int k = 0; k < 100; ++k)
		{
			auto inst = random_lemma31_instance(rng, dim / 2);
			auto r = lemma31_check(inst.phi, inst.J, inst.m, inst.n);
			if (r.premise())
				++premise;
			if (!r.consistent())
				out.fail("counterexample in dimension " + std::to_string(dim));
			auto Jm = structure_of(inst.J, inst.m);
			if (beltrami_of(inst.J, Jm) != inst.m)
				out.fail("Beltrami round trip m -> J_m -> m fails");
			if (structure_of(inst.J, beltrami_of(inst.J, Jm)).matrix() != Jm.matrix())
				out.fail("Beltrami round trip J' -> m -> J' fails");
			if (!oracle::is_beltrami_structure(inst.J, inst.m, Jm.matrix()))
				out.fail("J_m does not have the graph of m as (0,1)-space");
		}
		if (premise < 100)
			out.fail("only " + std::to_string(premise) + " premise-satisfying instances in dimension " +
			         std::to_string(dim));
	}

	auto inputs = parse_lemma31(read_file(root / "models" / "lemma31" / "counterexample.lemma31"));
	auto const &in = inputs.at(0);
	auto r = lemma31_check(in.phi, ComplexStructure(in.J), in.m, in.n);
	if (!(r.h1 && !r.h2 && !r.conclusion))
		out.fail("recorded H1 and not H2 instance does not have C false");

	double t = seconds_since(t0);
	if (t >= 10.0)
		out.fail("took " + std::to_string(t) + " s");
	if (out.passed)
		out.detail = "300 premise-satisfying instances, recorded H1-only instance";
	return out;
}

// 9. golden reports and the parse/serialize round trip
Outcome criterion_determinism()
{
	Outcome out;
	std::ifstream manifest(root / "tests" / "golden" / "MANIFEST");
	std::string line;
	size_t runs = 0;
	std::string cwd = fs::current_path().string();
	fs::current_path(root);
	while (std::getline(manifest, line))
	{
		if (line.empty() || line[0] == '#')
			continue;
		std::istringstream ls(line);
		int code = 0;
		std::string file, arg;
		std::vector<std::string> args;
		ls >> code >> file;
		while (ls >> arg)
			args.push_back(arg);

		std::string golden = read_file(root / "tests" / "golden" / file);
		std::string first;
		for (int pass = 0; pass < 2; ++pass)
		{
			std::ostringstream os, es;
			int got = run_cli(args, os, es);
			if (got != code)
				out.fail(file + ": exit " + std::to_string(got) + ", expected " + std::to_string(code));
			if (os.str() != golden)
				out.fail(file + ": output differs from golden file");
			if (pass == 0)
				first = os.str();
			else if (os.str() != first)
				out.fail(file + ": consecutive runs differ");
		}
		++runs;
	}
	fs::current_path(cwd);

	for (auto const &path : bundled_models())
	{
		auto m1 = load_model(path);
		auto s1 = serialize_model(m1);
		auto m2 = parse_model(s1);
		if (serialize_model(m2) != s1 || !oracle::same_model(m1, m2))
			out.fail(stem(path) + ": round trip is not the identity");
	}
	if (runs == 0)
		out.fail("empty manifest");
	if (out.passed)
		out.detail = std::to_string(runs) + " golden reports, " + std::to_string(bundled_models().size()) +
		             " round trips";
	return out;
}

} // namespace

int main()
{
	std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
	    {"dgla axioms", criterion_dgla},
	    {"hodge identities", criterion_hodge},
	    {"closed forms", criterion_closed_forms},
	    {"residual identities", criterion_residuals},
	    {"equivariance", criterion_equivariance},
	    {"weyl averaging", criterion_averaging},
	    {"complexification", criterion_complexification},
	    {"complex structure lemma", criterion_lemma},
	    {"cli determinism", criterion_determinism},
	};
	int failures = 0;
	for (size_t k = 0; k < criteria.size(); ++k)
	{
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try
		{
			o = criteria[k].second();
		}
		catch (std::exception const &e)
		{
			o.fail(std::string("exception: ") + e.what());
		}
		char timing[32];
		std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
		std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.passed ? "PASS" : "FAIL")
		          << " [" << timing << "] " << o.detail << "\n";
		if (!o.passed)
			++failures;
	}
	return failures == 0 ? 0 : 1;
}
