#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "upst/constructors.hpp"
#include "upst/cyclotomic.hpp"
#include "upst/graph.hpp"
#include "upst/spectra.hpp"
#include "upst/walk.hpp"

namespace upst {

using Json = nlohmann::json;

/// x rounded to 15 significant digits.
double round15(double x);

/// {"n": m, "coeffs": ["p/q", ...]} in the reduced power basis.
Json to_json(const CycNum& x);
CycNum cycnum_from_json(const Json& j);

/// {"order": n, "conductor": m, "a": [CycNum, ...]}.
Json to_json(const CirculantSpec& spec);
CirculantSpec circulant_from_json(const Json& j);

/// Rows of [re, im] pairs.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

/// {"n", "X", "lambdas", "exact_lambdas" (fraction strings, optional)}.
Json to_json(const EigenSystem& es);
EigenSystem eigensystem_from_json(const Json& j);

Json to_json(const TransferReport& report);

struct CirculantCDescriptor {
  int n = 0;
  std::vector<long long> c;
  friend bool operator==(const CirculantCDescriptor&, const CirculantCDescriptor&) = default;
};
struct NondenseDescriptor {
  int p = 0;
  int q = 0;
  friend bool operator==(const NondenseDescriptor&, const NondenseDescriptor&) = default;
};
using Descriptor = std::variant<CirculantCDescriptor, NondenseDescriptor, NoncirculantParams>;

/// Parses {"family": "circulant_c" | "nondense" | "noncirculant", ...}.
/// Throws InputError on unknown families, missing or mistyped fields.
Descriptor descriptor_from_json(const Json& j);
Json to_json(const Descriptor& d);

/// A graph together with whatever exact or spectral data is known about it.
struct GraphBundle {
  HermitianGraph graph;
  std::optional<EigenSystem> eigensystem;
  std::optional<Descriptor> descriptor;
  Rational shift = 0;
};

/// Runs the constructor named by the descriptor.
GraphBundle build(const Descriptor& d);

/// Adds shift * I to the graph and shift to every eigenvalue.
GraphBundle shifted(const GraphBundle& bundle, const Rational& shift);

/// {"n", "matrix", "circulant"?, "eigensystem"?, "descriptor"?, "shift"}.
Json to_json(const GraphBundle& bundle);

/// Reads a graph file (as written above) or a bare descriptor. The exact
/// circulant wins over the matrix when both are present; they must agree to 1e-9.
GraphBundle bundle_from_json(const Json& j);

}  // namespace upst
