#pragma once

#include <stdexcept>
#include <string>

namespace kforge
{

/// Base class for every error raised by the library.
struct Error : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Malformed text input (scalars, model files, lemma31 instance files).
struct ParseError : Error
{
	using Error::Error;
};

/// Structurally inconsistent data: sizes that do not match, indices out of range.
struct FormatError : Error
{
	using Error::Error;
};

/// Operand shapes that do not fit the requested operation.
struct DimensionError : Error
{
	using Error::Error;
};

/// A mathematically valid request that cannot be carried out on this input.
struct MathError : Error
{
	using Error::Error;
};

} // namespace kforge
