#pragma once

#include <string>
#include <vector>

namespace kforge
{

/// Outcome of one named verification. `witness` describes the first violation.
struct CheckResult
{
	std::string name;
	bool passed = true;
	std::string witness;
};

struct ValidationReport
{
	std::vector<CheckResult> checks;

	bool ok() const
	{
		for (auto const &c : checks)
			if (!c.passed)
				return false;
		return true;
	}

	/// nullptr when no check has this name.
	CheckResult const *find(std::string const &name) const
	{
		for (auto const &c : checks)
			if (c.name == name)
				return &c;
		return nullptr;
	}

	void add(std::string name, bool passed, std::string witness = {})
	{
		checks.push_back({std::move(name), passed, std::move(witness)});
	}

	void append(ValidationReport const &other, std::string const &prefix = {})
	{
		for (auto const &c : other.checks)
			checks.push_back({prefix + c.name, c.passed, c.witness});
	}
};

} // namespace kforge
