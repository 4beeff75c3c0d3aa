#include "kforge/model.hpp"
#include "kforge/error.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kforge
{

using json = nlohmann::ordered_json;

namespace
{

std::string index_path(std::string const &path, size_t k)
{
	return path + "[" + std::to_string(k) + "]";
}

std::string key_path(std::string const &path, std::string const &key)
{
	return path.empty() ? key : path + "." + key;
}

json const &require(json const &obj, std::string const &path, std::string const &key)
{
	if (!obj.contains(key))
		throw ParseError(key_path(path, key) + ": missing field");
	return obj.at(key);
}

void expect_array(json const &v, std::string const &path)
{
	if (!v.is_array())
		throw ParseError(path + ": expected an array");
}

void expect_object(json const &v, std::string const &path)
{
	if (!v.is_object())
		throw ParseError(path + ": expected an object");
}

size_t parse_index(json const &v, std::string const &path)
{
	if (!v.is_number_unsigned())
		throw ParseError(path + ": expected a non-negative integer");
	return v.get<size_t>();
}

long parse_long(json const &v, std::string const &path)
{
	if (!v.is_number_integer())
		throw ParseError(path + ": expected an integer");
	return v.get<long>();
}

Scalar parse_scalar(json const &v, std::string const &path)
{
	if (v.is_number_integer())
		return Scalar(v.get<long>());
	if (!v.is_string())
		throw ParseError(path + ": expected a scalar string");
	try
	{
		return Scalar::parse(v.get<std::string>());
	}
	catch (ParseError const &e)
	{
		throw ParseError(path + ": " + e.what());
	}
}

Matrix parse_matrix(json const &v, std::string const &path, size_t rows, size_t cols)
{
	expect_array(v, path);
	if (v.size() != rows)
		throw FormatError(path + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
	Matrix m(rows, cols);
	for (size_t r = 0; r < rows; ++r)
	{
		auto rp = index_path(path, r);
		expect_array(v[r], rp);
		if (v[r].size() != cols)
			throw FormatError(rp + ": expected " + std::to_string(cols) + " columns, found " +
			                  std::to_string(v[r].size()));
		for (size_t c = 0; c < cols; ++c)
			m(r, c) = parse_scalar(v[r][c], index_path(rp, c));
	}
	return m;
}

std::vector<std::pair<size_t, Scalar>> parse_out(json const &v, std::string const &path)
{
	expect_array(v, path);
	std::vector<std::pair<size_t, Scalar>> out;
	for (size_t n = 0; n < v.size(); ++n)
	{
		auto ep = index_path(path, n);
		if (!v[n].is_array() || v[n].size() != 2)
			throw ParseError(ep + ": expected [index, scalar]");
		out.emplace_back(parse_index(v[n][0], index_path(ep, 0)), parse_scalar(v[n][1], index_path(ep, 1)));
	}
	return out;
}

GroupElement parse_element(json const &v, std::string const &path, GradedVectorSpace const &space)
{
	expect_array(v, path);
	size_t degrees = space.dims().size();
	if (v.size() != degrees)
		throw FormatError(path + ": expected one matrix per degree (" + std::to_string(degrees) + ")");
	GroupElement g;
	for (size_t p = 0; p < degrees; ++p)
		g.push_back(parse_matrix(v[p], index_path(path, p), space.dims()[p], space.dims()[p]));
	return g;
}

GroupSpec parse_group(json const &v, GradedVectorSpace const &space)
{
	std::string path = "group";
	expect_object(v, path);
	if (v.size() != 1)
		throw ParseError("group: expected exactly one of \"finite\" or \"torus\"");
	if (v.contains("finite"))
	{
		auto const &f = v.at("finite");
		expect_object(f, "group.finite");
		auto const &gens = require(f, "group.finite", "generators");
		expect_array(gens, "group.finite.generators");
		FiniteGenerators out;
		for (size_t k = 0; k < gens.size(); ++k)
			out.generators.push_back(parse_element(gens[k], index_path("group.finite.generators", k), space));
		return out;
	}
	if (v.contains("torus"))
	{
		auto const &t = v.at("torus");
		expect_object(t, "group.torus");
		TorusAction out;
		out.rank = parse_index(require(t, "group.torus", "rank"), "group.torus.rank");
		auto const &w = require(t, "group.torus", "weights");
		std::string wp = "group.torus.weights";
		expect_array(w, wp);
		if (w.size() != space.dims().size())
			throw FormatError(wp + ": expected one list per degree");
		for (size_t p = 0; p < w.size(); ++p)
		{
			auto pp = index_path(wp, p);
			expect_array(w[p], pp);
			if (w[p].size() != space.dims()[p])
				throw FormatError(pp + ": expected " + std::to_string(space.dims()[p]) + " weights");
			std::vector<std::vector<long>> degree;
			for (size_t i = 0; i < w[p].size(); ++i)
			{
				auto ip = index_path(pp, i);
				expect_array(w[p][i], ip);
				if (w[p][i].size() != out.rank)
					throw FormatError(ip + ": weight length differs from rank");
				std::vector<long> wt;
				for (size_t r = 0; r < out.rank; ++r)
					wt.push_back(parse_long(w[p][i][r], index_path(ip, r)));
				degree.push_back(std::move(wt));
			}
			out.weights.push_back(std::move(degree));
		}
		return out;
	}
	throw ParseError("group: expected \"finite\" or \"torus\"");
}

LieAlgebraAction parse_lie(json const &v, GradedVectorSpace const &space)
{
	std::string path = "lie_algebra";
	expect_object(v, path);
	size_t dim = parse_index(require(v, path, "dim"), "lie_algebra.dim");
	std::vector<LieStructureEntry> entries;
	if (v.contains("structure"))
	{
		auto const &s = v.at("structure");
		expect_array(s, "lie_algebra.structure");
		for (size_t n = 0; n < s.size(); ++n)
		{
			auto ep = index_path("lie_algebra.structure", n);
			expect_object(s[n], ep);
			LieStructureEntry e;
			e.a = parse_index(require(s[n], ep, "a"), ep + ".a");
			e.b = parse_index(require(s[n], ep, "b"), ep + ".b");
			e.out = parse_out(require(s[n], ep, "out"), ep + ".out");
			entries.push_back(std::move(e));
		}
	}
	auto const &r = require(v, path, "rep");
	expect_array(r, "lie_algebra.rep");
	std::vector<GroupElement> rep;
	for (size_t a = 0; a < r.size(); ++a)
		rep.push_back(parse_element(r[a], index_path("lie_algebra.rep", a), space));
	return make_lie_action(dim, entries, std::move(rep), space);
}

Model parse_document(json const &doc)
{
	if (!doc.is_object())
		throw ParseError("model: expected a JSON object");
	static const std::vector<std::string> known = {"name",   "dims",   "labels", "differential",
	                                               "bracket", "metric", "group",  "lie_algebra"};
	for (auto const &[key, _] : doc.items())
		if (std::find(known.begin(), known.end(), key) == known.end())
			throw ParseError(key + ": unknown field");

	Model model;
	if (doc.contains("name"))
	{
		if (!doc.at("name").is_string())
			throw ParseError("name: expected a string");
		model.name = doc.at("name").get<std::string>();
	}

	auto const &dj = require(doc, "", "dims");
	expect_array(dj, "dims");
	if (dj.empty())
		throw FormatError("dims: at least one degree is required");
	std::vector<size_t> dims;
	for (size_t p = 0; p < dj.size(); ++p)
		dims.push_back(parse_index(dj[p], index_path("dims", p)));

	std::vector<std::vector<std::string>> labels;
	if (doc.contains("labels"))
	{
		auto const &lj = doc.at("labels");
		expect_array(lj, "labels");
		for (size_t p = 0; p < lj.size(); ++p)
		{
			auto pp = index_path("labels", p);
			expect_array(lj[p], pp);
			std::vector<std::string> degree;
			for (size_t i = 0; i < lj[p].size(); ++i)
			{
				if (!lj[p][i].is_string())
					throw ParseError(index_path(pp, i) + ": expected a string");
				degree.push_back(lj[p][i].get<std::string>());
			}
			labels.push_back(std::move(degree));
		}
	}
	GradedVectorSpace space(dims, labels);
	int top = space.max_degree();

	std::vector<Matrix> differential;
	if (doc.contains("differential"))
	{
		auto const &d = doc.at("differential");
		expect_array(d, "differential");
		if (d.size() > static_cast<size_t>(top))
			throw FormatError("differential: expected at most " + std::to_string(top) + " maps");
		for (size_t p = 0; p < d.size(); ++p)
			differential.push_back(parse_matrix(d[p], index_path("differential", p), dims[p + 1], dims[p]));
	}

	std::vector<BracketEntry> table;
	if (doc.contains("bracket"))
	{
		auto const &b = doc.at("bracket");
		expect_array(b, "bracket");
		for (size_t n = 0; n < b.size(); ++n)
		{
			auto ep = index_path("bracket", n);
			expect_object(b[n], ep);
			BracketEntry e;
			e.p = static_cast<int>(parse_index(require(b[n], ep, "p"), ep + ".p"));
			e.i = parse_index(require(b[n], ep, "i"), ep + ".i");
			e.q = static_cast<int>(parse_index(require(b[n], ep, "q"), ep + ".q"));
			e.j = parse_index(require(b[n], ep, "j"), ep + ".j");
			e.out = parse_out(require(b[n], ep, "out"), ep + ".out");
			table.push_back(std::move(e));
		}
	}
	model.dgla = DGLA(space, std::move(differential), std::move(table));

	if (doc.contains("metric"))
	{
		auto const &m = doc.at("metric");
		expect_array(m, "metric");
		if (m.size() != dims.size())
			throw FormatError("metric: expected one matrix per degree (" + std::to_string(dims.size()) + ")");
		HermitianMetric metric;
		for (size_t p = 0; p < m.size(); ++p)
			metric.blocks.push_back(parse_matrix(m[p], index_path("metric", p), dims[p], dims[p]));
		model.metric = std::move(metric);
	}
	if (doc.contains("group"))
		model.group = parse_group(doc.at("group"), space);
	if (doc.contains("lie_algebra"))
		model.lie = parse_lie(doc.at("lie_algebra"), space);
	return model;
}

// canonical JSON values

json scalar_json(Scalar const &s)
{
	return s.str();
}

json matrix_json(Matrix const &m)
{
	json rows = json::array();
	for (size_t r = 0; r < m.rows(); ++r)
	{
		json row = json::array();
		for (size_t c = 0; c < m.cols(); ++c)
			row.push_back(scalar_json(m(r, c)));
		rows.push_back(std::move(row));
	}
	return rows;
}

json out_json(Vector const &v)
{
	json out = json::array();
	for (size_t k = 0; k < v.size(); ++k)
		if (!v[k].is_zero())
			out.push_back(json::array({k, scalar_json(v[k])}));
	return out;
}

json element_json(GroupElement const &g)
{
	json out = json::array();
	for (auto const &m : g)
		out.push_back(matrix_json(m));
	return out;
}

json to_json(Model const &model)
{
	auto const &D = model.dgla;
	auto const &space = D.space();
	json doc = json::object();
	if (!model.name.empty())
		doc["name"] = model.name;
	doc["dims"] = space.dims();
	doc["labels"] = space.labels();

	json d = json::array();
	for (int p = 0; p < D.max_degree(); ++p)
		d.push_back(matrix_json(D.d(p)));
	doc["differential"] = std::move(d);

	json b = json::array();
	for (int p = 0; p <= D.max_degree(); ++p)
		for (int q = p; p + q <= D.max_degree(); ++q)
			for (size_t i = 0; i < D.dim(p); ++i)
				for (size_t j = (p == q ? i : 0); j < D.dim(q); ++j)
				{
					auto const &v = D.structure(p, i, q, j);
					if (kforge::is_zero(v))
						continue;
					json e = json::object();
					e["p"] = p;
					e["i"] = i;
					e["q"] = q;
					e["j"] = j;
					e["out"] = out_json(v);
					b.push_back(std::move(e));
				}
	doc["bracket"] = std::move(b);

	if (model.metric)
	{
		json m = json::array();
		for (auto const &blk : model.metric->blocks)
			m.push_back(matrix_json(blk));
		doc["metric"] = std::move(m);
	}

	if (model.group)
	{
		json g = json::object();
		if (auto const *f = std::get_if<FiniteGenerators>(&*model.group))
		{
			json gens = json::array();
			for (auto const &e : f->generators)
				gens.push_back(element_json(e));
			g["finite"] = json::object({{"generators", std::move(gens)}});
		}
		else
		{
			auto const &t = std::get<TorusAction>(*model.group);
			json tj = json::object();
			tj["rank"] = t.rank;
			tj["weights"] = t.weights;
			g["torus"] = std::move(tj);
		}
		doc["group"] = std::move(g);
	}

	if (model.lie)
	{
		auto const &L = *model.lie;
		json l = json::object();
		l["dim"] = L.dim;
		json s = json::array();
		for (size_t a = 0; a < L.dim; ++a)
			for (size_t b2 = a + 1; b2 < L.dim; ++b2)
			{
				auto const &v = L.structure[a][b2];
				if (kforge::is_zero(v))
					continue;
				json e = json::object();
				e["a"] = a;
				e["b"] = b2;
				e["out"] = out_json(v);
				s.push_back(std::move(e));
			}
		l["structure"] = std::move(s);
		json r = json::array();
		for (auto const &g : L.rep)
			r.push_back(element_json(g));
		l["rep"] = std::move(r);
		doc["lie_algebra"] = std::move(l);
	}
	return doc;
}

bool is_leaf_array(json const &v)
{
	if (!v.is_array())
		return false;
	for (auto const &x : v)
		if (x.is_array() || x.is_object())
			return false;
	return true;
}

// Arrays of primitives go on one line, everything else is indented.
void emit(std::ostream &os, json const &v, int indent)
{
	std::string pad(indent * 2, ' ');
	std::string inner((indent + 1) * 2, ' ');
	if (is_leaf_array(v))
	{
		os << v.dump();
		return;
	}
	if (v.is_array())
	{
		os << "[\n";
		for (size_t k = 0; k < v.size(); ++k)
		{
			os << inner;
			emit(os, v[k], indent + 1);
			os << (k + 1 < v.size() ? ",\n" : "\n");
		}
		os << pad << "]";
		return;
	}
	if (v.is_object())
	{
		if (v.empty())
		{
			os << "{}";
			return;
		}
		os << "{\n";
		size_t k = 0;
		for (auto const &[key, val] : v.items())
		{
			os << inner << json(key).dump() << ": ";
			emit(os, val, indent + 1);
			os << (++k < v.size() ? ",\n" : "\n");
		}
		os << pad << "}";
		return;
	}
	os << v.dump();
}

} // namespace

HermitianMetric Model::metric_or_identity() const
{
	return metric ? *metric : HermitianMetric::identity(dgla.space());
}

Model parse_model(std::string_view text)
{
	json doc;
	try
	{
		doc = json::parse(text.begin(), text.end());
	}
	catch (json::parse_error const &e)
	{
		throw ParseError(e.what());
	}
	return parse_document(doc);
}

std::string read_file(std::filesystem::path const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError(path.string() + ": cannot open file");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Model load_model(std::filesystem::path const &path)
{
	return parse_model(read_file(path));
}

std::string serialize_model(Model const &model)
{
	std::ostringstream os;
	emit(os, to_json(model), 0);
	os << "\n";
	return os.str();
}

std::string model_digest(Model const &model)
{
	auto text = serialize_model(model);
	unsigned char hash[EVP_MAX_MD_SIZE];
	unsigned int len = 0;
	EVP_Digest(text.data(), text.size(), hash, &len, EVP_sha256(), nullptr);
	static const char *hex = "0123456789abcdef";
	std::string out;
	for (unsigned int k = 0; k < len; ++k)
	{
		out += hex[hash[k] >> 4];
		out += hex[hash[k] & 15];
	}
	return out;
}

namespace
{

Matrix parse_square(json const &v, std::string const &path)
{
	expect_array(v, path);
	return parse_matrix(v, path, v.size(), v.size());
}

Lemma31Input parse_instance(json const &v, std::string const &path)
{
	expect_object(v, path);
	for (auto const &[key, _] : v.items())
		if (key != "label" && key != "J" && key != "phi" && key != "m" && key != "n")
			throw ParseError(key_path(path, key) + ": unknown field");
	Lemma31Input in;
	if (v.contains("label"))
	{
		if (!v.at("label").is_string())
			throw ParseError(key_path(path, "label") + ": expected a string");
		in.label = v.at("label").get<std::string>();
	}
	in.J = parse_square(require(v, path, "J"), key_path(path, "J"));
	if (in.J.rows() == 0 || in.J.rows() % 2 != 0)
		throw FormatError(key_path(path, "J") + ": size must be even and positive");
	size_t dim = in.J.rows();
	size_t h = dim / 2;
	in.phi = parse_matrix(require(v, path, "phi"), key_path(path, "phi"), dim, dim);
	in.m = parse_matrix(require(v, path, "m"), key_path(path, "m"), h, h);
	in.n = parse_matrix(require(v, path, "n"), key_path(path, "n"), h, h);
	return in;
}

} // namespace

std::vector<Lemma31Input> parse_lemma31(std::string_view text)
{
	json doc;
	try
	{
		doc = json::parse(text.begin(), text.end());
	}
	catch (json::parse_error const &e)
	{
		throw ParseError(e.what());
	}
	expect_object(doc, "document");
	std::vector<Lemma31Input> out;
	if (doc.contains("instances"))
	{
		if (doc.size() != 1)
			throw ParseError("instances: no other top-level fields allowed");
		auto const &list = doc.at("instances");
		expect_array(list, "instances");
		for (size_t k = 0; k < list.size(); ++k)
			out.push_back(parse_instance(list[k], index_path("instances", k)));
	}
	else
		out.push_back(parse_instance(doc, ""));
	return out;
}

} // namespace kforge
