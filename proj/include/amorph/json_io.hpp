#pragma once

#include "amorph/fusion.hpp"
#include "amorph/skewsym4.hpp"
#include "amorph/srg.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace amorph::io {

// Key order is part of the output format, so objects keep insertion order.
using Json = nlohmann::ordered_json;

// Throws ParseError carrying the line and column of the offending byte.
Json parse_json(std::string_view text);

// {"n":..,"d":..,"colors":[[..],..]}, compact, row-major.
std::string write_scheme(const ColorMatrix& m);
Json scheme_to_json(const ColorMatrix& m);
// Checks shape and ranges (InvalidColorMatrix naming the cell) before any
// axiom is tested.
ColorMatrix colors_from_json(const Json& j);
AssociationScheme read_scheme(std::string_view text);

// Exact entries use the tower rendering; numeric entries are "a", "bi" or
// "a+bi" with 17 significant digits.
std::string format_complex(std::complex<double> z);
std::complex<double> parse_complex(std::string_view text);

Json eigen_to_json(const Eigenmatrix& p);
Eigenmatrix eigen_from_json(const Json& j);

Json partition_to_json(const AdmissiblePartition& part);
AdmissiblePartition partition_from_json(const Json& j);
Json witness_to_json(const AxiomIIIWitness& w);
AxiomIIIWitness witness_from_json(const Json& j);
Json verdict_to_json(const PartitionVerdict& v);
PartitionVerdict verdict_from_json(const Json& j);

// "L_2(5)", "NL_1(4)", "Conference(25) = L_3(5) = NL_2(5)", "Other"
SrgTag parse_tag(std::string_view text);

Json srg_to_json(const SrgParams& p);
// Rebuilds from (n, k, lambda, mu) and rejects derived fields that disagree.
SrgParams srg_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json sweep_to_json(const SweepReport& report);
SweepReport sweep_from_json(const Json& j);

}  // namespace amorph::io
