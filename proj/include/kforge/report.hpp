#pragma once

#include "kforge/checks.hpp"
#include "kforge/dgla.hpp"
#include "kforge/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kforge
{

inline constexpr char const *tool_version = "kforge 1.0.0";

/// "2*f - 1/2*c", "(1+1*i)*e1", "0" for an empty sum.
std::string format_sum(std::vector<std::pair<Scalar, std::string>> const &terms);

/// Element of degree p written in the basis labels of the space.
std::string format_element(GradedVectorSpace const &space, int p, Vector const &v);

/// Component k of a series as a polynomial in t1..tn, descending grlex.
std::string format_polynomial(PowerSeries const &s, size_t k = 0);

/// "[[1, 0], [0, -1]]".
std::string format_matrix(Matrix const &m);

/**
 * Command output. Text form:
 *
 *   kforge 1.0.0
 *   command: <name>
 *   model: <file> sha256:<hex>
 *   check <name>: pass
 *   check <name>: FAIL <witness>
 *   <key>: <value>
 *   status: pass|fail
 *
 * Entries keep insertion order. The JSON form carries the same entries.
 */
class Report
{
  public:
	Report(std::string command, std::string model, std::string digest);

	void check(std::string const &name, bool passed, std::string const &witness = {});
	void checks(ValidationReport const &r, std::string const &prefix = {});
	void data(std::string const &key, std::string const &value);
	void fail() { forced_fail_ = true; }

	bool ok() const;
	std::string text() const;
	std::string json() const;

  private:
	struct Entry
	{
		bool is_check = false;
		std::string name;
		bool passed = true;
		std::string value;
	};

	std::string command_;
	std::string model_;
	std::string digest_;
	std::vector<Entry> entries_;
	bool forced_fail_ = false;
};

} // namespace kforge
