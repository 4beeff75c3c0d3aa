#pragma once

#include "kforge/dgla.hpp"
#include "kforge/group.hpp"
#include "kforge/hodge.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kforge
{

/// Finite group given by generators; the closure is computed on demand.
struct FiniteGenerators
{
	std::vector<GroupElement> generators;
};

using GroupSpec = std::variant<FiniteGenerators, TorusAction>;

/**
 * Contents of a model file: a JSON document with keys
 *
 *   name         optional string
 *   dims         array of per-degree dimensions
 *   labels       optional per-degree arrays of basis names
 *   differential array of matrices d_0 .. d_{D-1}
 *   bracket      array of {p, i, q, j, out: [[k, scalar], ...]} with p <= q
 *   metric       optional array of per-degree Hermitian matrices
 *   group        optional {finite: {generators: [[M_0..M_D], ...]}}
 *                      or {torus: {rank: r, weights: [[[w..], ...], ...]}}
 *   lie_algebra  optional {dim, structure: [{a, b, out}], rep: [[M_0..M_D], ...]}
 *
 * Matrices are row-major arrays of scalar strings. Indices are 0-based.
 */
struct Model
{
	std::string name;
	DGLA dgla;
	std::optional<HermitianMetric> metric;
	std::optional<GroupSpec> group;
	std::optional<LieAlgebraAction> lie;

	/// The model metric, or the identity in every degree.
	HermitianMetric metric_or_identity() const;
};

/// Throws ParseError (syntax, missing or mistyped fields) or FormatError (shape mismatches).
Model parse_model(std::string_view text);
Model load_model(std::filesystem::path const &path);

/// Canonical text: fixed key order, sorted bracket records, zero entries dropped.
std::string serialize_model(Model const &model);

/// Hex SHA-256 of the canonical serialization.
std::string model_digest(Model const &model);

/// One instance of a lemma31 input file. J is not yet checked for J^2 = -I.
struct Lemma31Input
{
	std::string label;
	Matrix J;
	Matrix phi;
	Matrix m;
	Matrix n;
};

/// A document {J, phi, m, n} or {instances: [{label?, J, phi, m, n}, ...]}.
/// J and phi are 2h x 2h, m and n are h x h.
std::vector<Lemma31Input> parse_lemma31(std::string_view text);

std::string read_file(std::filesystem::path const &path);

} // namespace kforge
