#pragma once

#include <json.hpp>

#include "freewitt/faber.hpp"
#include "freewitt/fock.hpp"
#include "freewitt/formal_group.hpp"
#include "freewitt/free_prob.hpp"
#include "freewitt/genus.hpp"
#include "freewitt/multipoly.hpp"
#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"
#include "freewitt/witt.hpp"

namespace freewitt::json_io {

using Json = nlohmann::json;

// Canonical text: keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);
// Throws ParseError on malformed text.
Json parse(const std::string& text);

Json encode(const Rational& r);
Rational decode_rational(const Json& j);
Json encode_rationals(const std::vector<Rational>& v);
std::vector<Rational> decode_rationals(const Json& j);

Json encode(const TruncSeries& s);
TruncSeries decode_series(const Json& j);

Json encode(const MultiPoly& p);
MultiPoly decode_poly(const Json& j);

Json encode(const Fgl& F);
Fgl decode_fgl(const Json& j);

template <class Tag>
Json encode(const CompVector<Tag>& v) {
    return Json{{"kind", std::string(Tag::kind)}, {"comps", encode_rationals(v.comps())}};
}
std::vector<Rational> decode_comps(const Json& j, std::string_view kind);
WittVector decode_witt(const Json& j);
GhostVector decode_ghost(const Json& j);
NecklaceVector decode_necklace(const Json& j);

Json encode(const LambdaElement& f);
LambdaElement decode_lambda(const Json& j);

Json encode(const Distribution& mu);
Distribution decode_distribution(const Json& j);
Json encode(const CumulantVector& k);
CumulantVector decode_cumulants(const Json& j);

// Row-major list of entries; numeric entries are "p/q" strings.
Json encode(const GrunskyTable& t);
GrunskyTable decode_grunsky(const Json& j);

Json encode(const OpElement& a);
OpElement decode_op(const Json& j);

Json encode(const Genus& g);
Genus decode_genus(const Json& j);
Json encode(const MSequence& K);
MSequence decode_msequence(const Json& j);

} // namespace freewitt::json_io
