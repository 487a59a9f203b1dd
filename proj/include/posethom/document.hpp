#pragma once

#include "posethom/functor.hpp"
#include "posethom/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posethom {

/// Functor section as written: keys are signatures ("[U1,U2]") and covering
/// pairs ("[U1] < [U1,U2]"); entries are decimal integer strings.
struct FunctorSection {
  std::string direction;  // "covariant" | "contravariant"
  std::vector<std::pair<std::string, std::size_t>> ranks;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> maps;

  friend bool operator==(const FunctorSection&, const FunctorSection&) = default;
};

/// One JSON document: space, optional topology, optional functor.
/// The grammar lives in docs/space-document.md.
struct SpaceDocument {
  std::optional<RawSpace> space;
  std::optional<std::vector<std::vector<std::string>>> topology;
  std::optional<FunctorSection> functor;
};

/// Syntax only. Throws ParseError ("line L, column C: ...") or UnknownField.
SpaceDocument parse_document(const std::string& text);
/// Two-space indented JSON with a trailing newline; stable for equal input.
std::string emit_document(const SpaceDocument& doc);

struct LoadedSpace {
  StructuredSpace space;
  Quotient quotient;
  std::optional<FiniteTopology> topology;
  std::optional<PosetFunctor> functor;  // on quotient.poset
  std::uint32_t digest = 0;             // crc32 of the source text
};

/// Parses and validates. Module failures are rethrown as ValidationError
/// with the module error as cause.
LoadedSpace load_space_text(const std::string& text);
LoadedSpace load_space(const std::string& path);

/// Reads a file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);
std::uint32_t crc32(const std::string& bytes);

/// Signature key such as "[U2, U1]" (order free) to its quotient class.
/// Throws UnknownSignature.
std::size_t resolve_signature_key(const StructuredSpace& space, const Quotient& q, const std::string& key);
/// Quotient class name in key form: "[U1,U2]".
std::string signature_key(const StructuredSpace& space, const Quotient& q, std::size_t cls);

/// Resolves a functor section against the quotient poset. Throws
/// UnknownSignature, MissingRank, ShapeMismatch or ParseError; the result
/// is not yet checked for path independence.
PosetFunctor resolve_functor(const FunctorSection& section, const StructuredSpace& space, const Quotient& q);
FunctorSection describe_functor(const PosetFunctor& f, const StructuredSpace& space, const Quotient& q);

/// Deterministic in (seed, n_points, n_sets, surjective). Points are p0..,
/// cover sets U1... With `surjective`, one witness point per nonempty
/// signature comes first, the rest are random. Throws InfeasibleRequest.
SpaceDocument generate_random_space(std::uint64_t seed, std::size_t n_points, std::size_t n_sets, bool surjective);

}  // namespace posethom
