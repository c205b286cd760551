#pragma once

#include <string>
#include <string_view>

#include "eulercat/constructions.hpp"
#include "eulercat/fincat.hpp"
#include "eulercat/functors.hpp"
#include "eulercat/lefschetz.hpp"

namespace eulercat {

// Line-oriented category format: `name:`, `objects:`, `arrow f: a -> b`,
// `identity a: f` (only needed when the identity is not named id_<a>),
// `compose g . f = h`, with `#` starting a comment. Serialization includes
// every arrow and every composite of non-identities, so a round trip
// reproduces the category exactly, order included.
std::string to_fincat_text(const FinCat& c);
FinCat parse_fincat(std::string_view text);

// `vertex a` and `edge e: a -> b` lines.
std::string to_digraph_text(const DirectedGraph& g);
DirectedGraph parse_digraph(std::string_view text);

// First directive of the functor formats: `domain: <ref>`. The ref names
// the category the data sits on; callers resolve it (the CLI treats it as a
// path relative to the referring file).
std::string header_domain(std::string_view text);

// `at a: e1, e2` element lines and `on f: e1 -> e3, e2 -> e3` action lines,
// one per object and per non-identity arrow; identity actions are implied
// and may be omitted. Validated on load.
std::string to_finfun_text(const SetFunctor& x, std::string_view domain_ref);
SetFunctor parse_finfun(std::string_view text, FinCat domain);

// `obj a -> Fa` and `arr f -> Ff` lines, one per object and per non-identity
// arrow; identities follow the object mapping.
std::string to_endofun_text(const Endofunctor& f, std::string_view domain_ref);
Endofunctor parse_endofun(std::string_view text, FinCat cat);

}  // namespace eulercat
