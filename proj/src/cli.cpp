#include "kforge/cli.hpp"
#include "kforge/cstruct.hpp"
#include "kforge/error.hpp"
#include "kforge/kuranishi.hpp"
#include "kforge/model.hpp"
#include "kforge/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace kforge
{

namespace
{

struct Options
{
	unsigned order = 6;
	bool invariant_metric = false;
	bool json = false;
	uint64_t seed = 0;
	size_t dim = 0;
	size_t count = 100;
	bool random = false;
	std::string path;
};

struct UsageError : Error
{
	using Error::Error;
};

size_t group_cap()
{
	char const *env = std::getenv("KFORGE_MAX_GROUP");
	if (!env)
		return default_group_cap;
	std::string s(env);
	if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12)
		throw UsageError("KFORGE_MAX_GROUP must be a positive integer");
	size_t cap = std::stoul(s);
	if (cap == 0)
		throw UsageError("KFORGE_MAX_GROUP must be a positive integer");
	return cap;
}

std::string tuple_str(std::vector<size_t> const &v)
{
	std::string out = "(";
	for (size_t k = 0; k < v.size(); ++k)
		out += (k ? ", " : "") + std::to_string(v[k]);
	return out + ")";
}

std::string idx(std::string const &name, size_t k)
{
	return name + "[" + std::to_string(k) + "]";
}

std::string generator_name(size_t a)
{
	return "X" + std::to_string(a);
}

GroupAction build_action(GroupSpec const &spec)
{
	if (auto const *f = std::get_if<FiniteGenerators>(&spec))
		return close_group(f->generators, group_cap());
	return std::get<TorusAction>(spec);
}

std::string describe_action(GroupAction const &action)
{
	if (auto const *f = std::get_if<FiniteAction>(&action))
		return "finite of order " + std::to_string(f->elements.size());
	return "torus of rank " + std::to_string(std::get<TorusAction>(action).rank);
}

// witnesses from a one-element action name that element g0
std::string strip_element(std::string const &w)
{
	if (w.rfind("g0 ", 0) == 0)
		return w.substr(3);
	return w;
}

class Command
{
  public:
	Command(std::string name, Options const &opt, std::ostream &out)
	    : opt_(opt), out_(out), report_(name, "", "")
	{
		name_ = std::move(name);
	}

	Model const &load()
	{
		model_ = load_model(opt_.path);
		report_ = Report(name_, std::filesystem::path(opt_.path).filename().string(), model_digest(model_));
		return model_;
	}

	Report &report() { return report_; }

	int finish()
	{
		out_ << (opt_.json ? report_.json() : report_.text());
		return report_.ok() ? exit_pass : exit_failure;
	}

	int fail(std::string const &message)
	{
		report_.data("error", message);
		report_.fail();
		return finish();
	}

  protected:
	Options const &opt_;
	std::ostream &out_;
	std::string name_;
	Report report_;
	Model model_;
};

bool validate_structure(Command &cmd, Model const &model)
{
	auto dgla = validate_dgla(model.dgla);
	cmd.report().checks(dgla, "dgla.");
	return dgla.ok();
}

int cmd_validate(Options const &opt, std::ostream &out)
{
	Command cmd("validate", opt, out);
	auto const &model = cmd.load();
	auto &rep = cmd.report();
	rep.data("dims", tuple_str(model.dgla.space().dims()));
	validate_structure(cmd, model);
	if (model.metric)
		rep.checks(validate_metric(model.dgla.space(), *model.metric), "metric.");
	if (model.group)
	{
		try
		{
			auto action = build_action(*model.group);
			rep.data("group", describe_action(action));
			rep.checks(validate_action(model.dgla, action), "group.");
		}
		catch (GroupTooLarge const &e)
		{
			rep.check("group.closure", false, e.what());
		}
	}
	if (model.lie)
		rep.checks(validate_lie_action(*model.lie, model.dgla), "lie.");
	return cmd.finish();
}

void report_harmonics(Report &rep, GradedVectorSpace const &space, HodgeData const &hodge)
{
	rep.data("harmonic_dims", tuple_str(hodge.harmonic_dims()));
	for (int p = 1; p <= std::min(2, hodge.max_degree()); ++p)
		for (size_t k = 0; k < hodge.harmonic[p].size(); ++k)
			rep.data(idx("harmonic" + std::to_string(p), k), format_element(space, p, hodge.harmonic[p][k]));
}

void report_solution(Report &rep, DGLA const &D, KuranishiSolution const &sol)
{
	auto const &space = D.space();
	rep.data("order", std::to_string(sol.order));
	auto const &terms = sol.phi.terms();
	if (terms.empty())
		rep.data("phi", "0");
	for (auto it = terms.rbegin(); it != terms.rend(); ++it)
		rep.data("phi[" + monomial_str(it->first) + "]", format_element(space, 1, it->second));

	bool any = false;
	for (size_t k = 0; k < sol.harmonic2.size(); ++k)
	{
		auto g = format_polynomial(sol.generators, k);
		if (g == "0")
			continue;
		any = true;
		rep.data(idx("generator", k), g);
	}
	if (!any)
		rep.data("summary", "no obstructions; Kuranishi space is smooth of dimension " + std::to_string(sol.nvars()));
	else
	{
		size_t count = 0;
		for (size_t k = 0; k < sol.harmonic2.size(); ++k)
			if (format_polynomial(sol.generators, k) != "0")
				++count;
		rep.data("summary", "Kuranishi space cut out by " + std::to_string(count) + " equation(s) in " +
		                        std::to_string(sol.nvars()) + " variable(s) through order " +
		                        std::to_string(sol.order));
	}
}

int cmd_solve(Options const &opt, std::ostream &out)
{
	Command cmd("solve", opt, out);
	auto const &model = cmd.load();
	auto &rep = cmd.report();
	auto const &D = model.dgla;
	if (!validate_structure(cmd, model))
		return cmd.finish();

	HermitianMetric metric = model.metric_or_identity();
	if (opt.invariant_metric)
	{
		if (!model.group)
			return cmd.fail("--invariant-metric needs a group block");
		auto action = build_action(*model.group);
		auto valid = validate_action(D, action);
		rep.checks(valid, "group.");
		if (!valid.ok())
			return cmd.finish();
		metric = average_metric(metric, action);
		rep.data("metric", "averaged over " + describe_action(action));
	}
	auto mvalid = validate_metric(D.space(), metric);
	rep.checks(mvalid, "metric.");
	if (!mvalid.ok())
		return cmd.finish();

	auto hodge = hodge_data(D, metric);
	report_harmonics(rep, D.space(), hodge);
	auto sol = solve(D, hodge, opt.order);
	report_solution(rep, D, sol);
	rep.checks(residual_report(D, hodge, sol), "kuranishi.");
	return cmd.finish();
}

int equivariance_group(Command &cmd, Model const &model, Options const &opt)
{
	auto &rep = cmd.report();
	auto const &D = model.dgla;
	auto action = build_action(*model.group);
	rep.data("group", describe_action(action));
	auto valid = validate_action(D, action);
	rep.checks(valid, "group.");
	if (!valid.ok())
		return cmd.finish();

	auto base = model.metric_or_identity();
	auto metric = average_metric(base, action);
	rep.checks(validate_metric(D.space(), metric), "averaged_metric.");
	rep.checks(check_metric_invariance(metric, action), "averaged_metric.");
	rep.check("averaged_metric.idempotent", average_metric(metric, action) == metric);
	if (!validate_metric(D.space(), metric).ok())
		return cmd.finish();

	auto hodge = hodge_data(D, metric);
	report_harmonics(rep, D.space(), hodge);
	auto sol = solve(D, hodge, opt.order);
	rep.data("order", std::to_string(opt.order));

	if (auto const *f = std::get_if<FiniteAction>(&action))
	{
		for (size_t k = 0; k < f->elements.size(); ++k)
		{
			FiniteAction single{{f->elements[k]}};
			std::string prefix = "g" + std::to_string(k) + ".";
			ValidationReport r = check_operator_equivariance(single, hodge);
			r.append(equivariance_report(D, hodge, single, sol));
			for (auto const &c : r.checks)
				rep.check(prefix + c.name, c.passed, strip_element(c.witness));
		}
	}
	else
	{
		rep.checks(check_operator_equivariance(action, hodge), "torus.");
		rep.checks(equivariance_report(D, hodge, action, sol), "torus.");
	}
	return cmd.finish();
}

int cmd_equivariance(Options const &opt, std::ostream &out)
{
	Command cmd("equivariance", opt, out);
	auto const &model = cmd.load();
	auto &rep = cmd.report();
	if (!model.group && !model.lie)
		return cmd.fail("model has no group or lie_algebra block");
	if (!validate_structure(cmd, model))
		return cmd.finish();
	if (model.group)
		return equivariance_group(cmd, model, opt);

	auto const &D = model.dgla;
	auto valid = validate_lie_action(*model.lie, D);
	rep.checks(valid, "lie.");
	if (!valid.ok())
		return cmd.finish();
	auto metric = model.metric_or_identity();
	auto mvalid = validate_metric(D.space(), metric);
	rep.checks(mvalid, "metric.");
	if (!mvalid.ok())
		return cmd.finish();
	auto hodge = hodge_data(D, metric);
	report_harmonics(rep, D.space(), hodge);
	rep.checks(check_derivation_equivariance(*model.lie, D, hodge), "lie.");
	return cmd.finish();
}

int cmd_complexify(Options const &opt, std::ostream &out)
{
	Command cmd("complexify", opt, out);
	auto const &model = cmd.load();
	auto &rep = cmd.report();
	if (!model.lie)
		return cmd.fail("model has no lie_algebra block");
	auto const &D = model.dgla;
	auto const &L = *model.lie;
	rep.checks(validate_lie_action(L, D), "real.");

	auto C = complexify_lie_action(L);
	rep.data("lie_dim", std::to_string(C.dim));
	for (size_t a = 0; a < C.dim; ++a)
		for (size_t b = a + 1; b < C.dim; ++b)
		{
			std::vector<std::pair<Scalar, std::string>> terms;
			for (size_t c = 0; c < C.dim; ++c)
				terms.emplace_back(C.structure[a][b][c], generator_name(c));
			auto s = format_sum(terms);
			if (s != "0")
				rep.data("bracket[" + generator_name(a) + ", " + generator_name(b) + "]", s);
		}
	for (size_t a = 0; a < C.dim; ++a)
	{
		auto iX = C.rho(Scalar::i() * unit_vector(C.dim, a));
		for (int p = 0; p <= D.max_degree(); ++p)
		{
			if (D.dim(p) == 0)
				continue;
			std::string deg = "[" + std::to_string(p) + "]";
			rep.data("rho[" + generator_name(a) + "]" + deg, format_matrix(C.rep[a][p]));
			rep.data("rho_C[i*" + generator_name(a) + "]" + deg, format_matrix(iX[p]));
		}
	}

	rep.checks(check_homomorphism(C, opt.seed), "complex.");
	std::string witness;
	for (size_t a = 0; a < L.dim && witness.empty(); ++a)
		if (C.rho(unit_vector(L.dim, a)) != L.rep[a])
			witness = "differs on " + generator_name(a);
	rep.check("complex.restriction_real", witness.empty(), witness);

	auto metric = model.metric_or_identity();
	if (validate_metric(D.space(), metric).ok())
	{
		auto hodge = hodge_data(D, metric);
		rep.checks(check_derivation_equivariance(C, D, hodge), "complex.");
	}
	else
		rep.check("metric.metric_positive_definite", false);
	return cmd.finish();
}

int cmd_lemma31(Options const &opt, std::ostream &out)
{
	Command cmd("lemma31", opt, out);
	auto &rep = cmd.report();
	size_t premise = 0, conclusion = 0, counterexamples = 0, total = 0;

	auto record = [&](std::string const &name, Lemma31Result const &r) {
		++total;
		if (r.premise())
		{
			++premise;
			if (r.conclusion)
				++conclusion;
			else
				++counterexamples;
		}
		auto yn = [](bool b) { return b ? "yes" : "no"; };
		if (!opt.random)
			rep.data(name, std::string("H1=") + yn(r.h1) + " H2=" + yn(r.h2) + " C=" + yn(r.conclusion));
	};

	if (opt.random)
	{
		if (opt.dim == 0 || opt.dim % 2 != 0)
			throw UsageError("--dim must be a positive even number");
		rep.data("mode", "random dim=" + std::to_string(opt.dim) + " seed=" + std::to_string(opt.seed) +
		                     " count=" + std::to_string(opt.count));
		ExactRandom rng(opt.seed);
		std::string roundtrip;
		for (size_t k = 0; k < opt.count; ++k)
		{
			auto inst = random_lemma31_instance(rng, opt.dim / 2);
			if (roundtrip.empty() && beltrami_of(inst.J, structure_of(inst.J, inst.m)) != inst.m)
				roundtrip = idx("instance", k);
			record(idx("instance", k), lemma31_check(inst.phi, inst.J, inst.m, inst.n));
		}
		rep.check("lemma31.beltrami_round_trip", roundtrip.empty(), roundtrip);
	}
	else
	{
		auto inputs = parse_lemma31(read_file(opt.path));
		rep = Report("lemma31", std::filesystem::path(opt.path).filename().string(), "");
		for (size_t k = 0; k < inputs.size(); ++k)
		{
			auto const &in = inputs[k];
			std::string name = idx("instance", k) + (in.label.empty() ? "" : " " + in.label);
			try
			{
				ComplexStructure J(in.J);
				record(name, lemma31_check(in.phi, J, in.m, in.n));
			}
			catch (MathError const &e)
			{
				rep.check(name, false, e.what());
			}
		}
	}
	rep.data("instances", std::to_string(total));
	rep.data("premise_satisfied", std::to_string(premise));
	rep.data("summary", std::to_string(conclusion) + "/" + std::to_string(premise) +
	                        " conclusion holds among premise-satisfying instances");
	rep.check("lemma31.no_counterexample", counterexamples == 0,
	          std::to_string(counterexamples) + " counterexample(s)");
	return cmd.finish();
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact Kuranishi family computations for finite-dimensional DGLA models", "kforge"};
	app.require_subcommand(1);
	app.set_version_flag("--version", tool_version);

	Options opt;
	auto model_arg = [&](CLI::App *sub, bool required) {
		auto *o = sub->add_option("model-file", opt.path, "model file");
		if (required)
			o->required();
		sub->add_flag("--json", opt.json, "machine-readable report");
	};

	auto *validate = app.add_subcommand("validate", "check DGLA axioms, metric and actions");
	model_arg(validate, true);

	auto *solve_cmd = app.add_subcommand("solve", "compute the Kuranishi family through order N");
	model_arg(solve_cmd, true);
	solve_cmd->add_option("--order", opt.order, "truncation order")->check(CLI::PositiveNumber);
	solve_cmd->add_flag("--invariant-metric", opt.invariant_metric, "average the metric over the group first");

	auto *equiv = app.add_subcommand("equivariance", "check equivariance of the Hodge operators and of phi");
	model_arg(equiv, true);
	equiv->add_option("--order", opt.order, "truncation order")->check(CLI::PositiveNumber);

	auto *cplx = app.add_subcommand("complexify", "extend a Lie-algebra action to complex scalars");
	model_arg(cplx, true);
	cplx->add_option("--seed", opt.seed, "seed for random sample pairs");

	auto *lemma = app.add_subcommand("lemma31", "check J-linear maps against Beltrami data");
	model_arg(lemma, false);
	lemma->add_flag("--random", opt.random, "generate random premise-satisfying instances");
	lemma->add_option("--dim", opt.dim, "real dimension 2m for --random");
	lemma->add_option("--seed", opt.seed, "random seed");
	lemma->add_option("--count", opt.count, "number of random instances");

	std::vector<std::string> argv_store{"kforge"};
	argv_store.insert(argv_store.end(), args.begin(), args.end());
	std::vector<char const *> argv;
	for (auto const &a : argv_store)
		argv.push_back(a.c_str());

	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e, out, err);
		return code == 0 ? exit_pass : exit_usage;
	}

	try
	{
		if (lemma->parsed())
		{
			if (opt.random == !opt.path.empty())
				throw UsageError("lemma31 needs either a file or --random");
			return cmd_lemma31(opt, out);
		}
		if (validate->parsed())
			return cmd_validate(opt, out);
		if (solve_cmd->parsed())
			return cmd_solve(opt, out);
		if (equiv->parsed())
			return cmd_equivariance(opt, out);
		return cmd_complexify(opt, out);
	}
	catch (UsageError const &e)
	{
		err << "kforge: " << e.what() << "\n";
		return exit_usage;
	}
	catch (ParseError const &e)
	{
		err << "kforge: parse error: " << e.what() << "\n";
		return exit_usage;
	}
	catch (FormatError const &e)
	{
		err << "kforge: format error: " << e.what() << "\n";
		return exit_usage;
	}
	catch (Error const &e)
	{
		err << "kforge: " << e.what() << "\n";
		return exit_failure;
	}
}

} // namespace kforge
