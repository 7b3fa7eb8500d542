#pragma once

#include "quiverdt/cyclotomic.hpp"
#include "quiverdt/partition.hpp"
#include "quiverdt/poly.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/ratfun.hpp"
#include "quiverdt/types.hpp"

#include <string>

namespace quiverdt {

// Canonical text forms. Every printer below is deterministic, so identical
// values always render to identical bytes.

// descending powers, e.g. "t^3 - 2*t + 1"; the zero polynomial is "0"
std::string poly_text(const Poly& p);

// a polynomial prints bare, anything else as "num / (den)"
std::string ratfun_text(const RatFun& f);

// rational values print as fractions, others as a polynomial in z{m}
std::string cyclo_text(const Cyclo& c);

// parts joined by '+', e.g. "2+1"; the empty partition is "0"
std::string partition_text(const Partition& p);

// components joined by '|' in brackets, e.g. "[2+1|1+1]"
std::string multipartition_text(const MultiPartition& m);

// support entries with multiplicities, e.g. "{(d=1,[1|1]):2}"
std::string type_text(const TypeOmega& w);

// comma-separated nonnegative integers, e.g. "2,1"
DimVector parse_dims(const std::string& s);

// Quiver files: {"vertices": n, "arrows": [[i, j], ...]} with 1-based vertex
// numbers; loops are [i, i] and parallel arrows repeat. Throws input_error
// with a parse diagnostic on anything else.
Quiver quiver_from_json_text(const std::string& text);
std::string quiver_to_json_text(const Quiver& g);

}  // namespace quiverdt
