#include "kforge/report.hpp"

#include <json.hpp>

#include <sstream>

namespace kforge
{

namespace
{

std::string term(Scalar const &c, std::string const &symbol)
{
	if (symbol.empty())
		return c.str();
	if (c.is_one())
		return symbol;
	if (c == Scalar(-1))
		return "-" + symbol;
	if (c.is_real())
		return c.str() + "*" + symbol;
	return "(" + c.str() + ")*" + symbol;
}

} // namespace

std::string format_sum(std::vector<std::pair<Scalar, std::string>> const &terms)
{
	std::string out;
	for (auto const &[c, symbol] : terms)
	{
		if (c.is_zero())
			continue;
		auto t = term(c, symbol);
		if (out.empty())
			out = t;
		else if (t[0] == '-')
			out += " - " + t.substr(1);
		else
			out += " + " + t;
	}
	return out.empty() ? "0" : out;
}

std::string format_element(GradedVectorSpace const &space, int p, Vector const &v)
{
	std::vector<std::pair<Scalar, std::string>> terms;
	for (size_t i = 0; i < v.size(); ++i)
		terms.emplace_back(v[i], space.label(p, i));
	return format_sum(terms);
}

std::string format_polynomial(PowerSeries const &s, size_t k)
{
	std::vector<std::pair<Scalar, std::string>> terms;
	for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
	{
		auto symbol = monomial_str(it->first);
		terms.emplace_back(it->second[k], symbol == "1" ? "" : symbol);
	}
	return format_sum(terms);
}

std::string format_matrix(Matrix const &m)
{
	std::string out = "[";
	for (size_t r = 0; r < m.rows(); ++r)
	{
		out += r ? ", [" : "[";
		for (size_t c = 0; c < m.cols(); ++c)
			out += (c ? ", " : "") + m(r, c).str();
		out += "]";
	}
	return out + "]";
}

Report::Report(std::string command, std::string model, std::string digest)
    : command_(std::move(command)), model_(std::move(model)), digest_(std::move(digest))
{
}

void Report::check(std::string const &name, bool passed, std::string const &witness)
{
	entries_.push_back({true, name, passed, witness});
}

void Report::checks(ValidationReport const &r, std::string const &prefix)
{
	for (auto const &c : r.checks)
		check(prefix + c.name, c.passed, c.witness);
}

void Report::data(std::string const &key, std::string const &value)
{
	entries_.push_back({false, key, true, value});
}

bool Report::ok() const
{
	if (forced_fail_)
		return false;
	for (auto const &e : entries_)
		if (e.is_check && !e.passed)
			return false;
	return true;
}

std::string Report::text() const
{
	std::ostringstream os;
	os << tool_version << "\n";
	os << "command: " << command_ << "\n";
	if (!model_.empty())
		os << "model: " << model_ << (digest_.empty() ? "" : " sha256:" + digest_) << "\n";
	for (auto const &e : entries_)
	{
		if (e.is_check)
		{
			os << "check " << e.name << ": " << (e.passed ? "pass" : "FAIL");
			if (!e.passed && !e.value.empty())
				os << " " << e.value;
			os << "\n";
		}
		else
			os << e.name << ": " << e.value << "\n";
	}
	os << "status: " << (ok() ? "pass" : "fail") << "\n";
	return os.str();
}

std::string Report::json() const
{
	nlohmann::ordered_json doc;
	doc["tool"] = tool_version;
	doc["command"] = command_;
	if (!model_.empty())
	{
		doc["model"] = model_;
		if (!digest_.empty())
			doc["sha256"] = digest_;
	}
	auto entries = nlohmann::ordered_json::array();
	for (auto const &e : entries_)
	{
		nlohmann::ordered_json j;
		if (e.is_check)
		{
			j["check"] = e.name;
			j["status"] = e.passed ? "pass" : "fail";
			if (!e.passed && !e.value.empty())
				j["witness"] = e.value;
		}
		else
		{
			j["key"] = e.name;
			j["value"] = e.value;
		}
		entries.push_back(std::move(j));
	}
	doc["entries"] = std::move(entries);
	doc["status"] = ok() ? "pass" : "fail";
	return doc.dump(2) + "\n";
}

} // namespace kforge
