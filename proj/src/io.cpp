#include "upst/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "upst/errors.hpp"

namespace upst {

namespace {

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex entry must be [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(std::complex<double> z) {
  return Json::array({round15(z.real()), round15(z.imag())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InputError("exact value must be a fraction string or an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long long integer_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer())
    throw InputError(std::string("field \"") + name + "\" must be an integer");
  return v.get<long long>();
}

int int_field(const Json& j, const char* name, long long lo, long long hi) {
  const long long v = integer_field(j, name);
  if (v < lo || v > hi)
    throw InputError(std::string("field \"") + name + "\" out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

GraphBundle circulant_bundle(const CirculantSpec& spec, Descriptor d) {
  return GraphBundle{circulant_to_graph(spec), circulant_eigensystem(spec), std::move(d), 0};
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rational_to_string(q));
  return {{"n", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  const int n = int_field(j, "n", 1, 1 << 20);
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array");
  std::vector<Rational> v;
  for (const auto& c : coeffs) v.push_back(rational_from_json(c));
  if (static_cast<int>(v.size()) == euler_phi(n)) return CycNum::from_coefficients(n, std::move(v));
  if (static_cast<int>(v.size()) == n) return CycNum::from_exponents(n, v);
  throw InputError("cyclotomic value in Q(zeta_" + std::to_string(n) + ") needs " +
                   std::to_string(euler_phi(n)) + " or " + std::to_string(n) + " coefficients");
}

Json to_json(const CirculantSpec& spec) {
  Json a = Json::array();
  for (const auto& x : spec.coefficients()) a.push_back(to_json(x));
  return {{"order", spec.order()}, {"conductor", spec.conductor()}, {"a", a}};
}

CirculantSpec circulant_from_json(const Json& j) {
  const Json& a = field(j, "a");
  if (!a.is_array() || a.empty()) throw InputError("\"a\" must be a non-empty array");
  std::vector<CycNum> coeffs;
  for (const auto& x : a) coeffs.push_back(cycnum_from_json(x));
  if (j.contains("order") && j.at("order") != Json(coeffs.size()))
    throw InputError("circulant \"order\" does not match the length of \"a\"");
  return CirculantSpec::make(std::move(coeffs));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw InputError("matrix row " + std::to_string(r) + " has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const EigenSystem& es) {
  Json lambdas = Json::array();
  for (double l : es.lambdas) lambdas.push_back(round15(l));
  Json out = {{"n", es.n}, {"X", matrix_to_json(es.X)}, {"lambdas", lambdas}};
  if (es.exact_lambdas) {
    Json exact = Json::array();
    for (const auto& q : *es.exact_lambdas) exact.push_back(rational_to_string(q));
    out["exact_lambdas"] = exact;
  }
  return out;
}

EigenSystem eigensystem_from_json(const Json& j) {
  const Json& lam = field(j, "lambdas");
  if (!lam.is_array()) throw InputError("\"lambdas\" must be an array");
  std::vector<double> lambdas;
  for (const auto& l : lam) {
    if (!l.is_number()) throw InputError("eigenvalues must be numbers");
    lambdas.push_back(l.get<double>());
  }
  std::optional<std::vector<Rational>> exact;
  if (j.contains("exact_lambdas") && !j.at("exact_lambdas").is_null()) {
    exact.emplace();
    for (const auto& q : j.at("exact_lambdas")) exact->push_back(rational_from_json(q));
    for (std::size_t k = 0; k < exact->size() && k < lambdas.size(); ++k)
      lambdas[k] = (*exact)[k].get_d();
  }
  if (j.contains("n") && j.at("n") != Json(lambdas.size()))
    throw InputError("eigensystem \"n\" does not match the number of eigenvalues");
  try {
    return EigenSystem::make(matrix_from_json(field(j, "X")), std::move(lambdas), std::move(exact));
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
}

Json to_json(const TransferReport& r) {
  auto optional_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json times = Json::array();
  Json phases = Json::array();
  for (int u = 0; u < r.n; ++u) {
    Json trow = Json::array();
    Json prow = Json::array();
    for (int v = 0; v < r.n; ++v) {
      const auto t = r.min_time(u, v);
      trow.push_back(t ? Json(round15(*t)) : Json(nullptr));
      prow.push_back(complex_to_json(r.phase(u, v)));
    }
    times.push_back(std::move(trow));
    phases.push_back(std::move(prow));
  }
  Json analytic = Json::array();
  for (double t : r.analytic_times) analytic.push_back(round15(t));
  return {{"n", r.n},
          {"upst", r.upst},
          {"reason", std::string(to_string(r.reason))},
          {"detail", r.detail},
          {"min_times", times},
          {"phases", phases},
          {"analytic_times", analytic},
          {"literal_phase_equality", optional_bool(r.literal_phase_equality)},
          {"circulant_timing", optional_bool(r.circulant_timing)},
          {"dense", optional_bool(r.dense)},
          {"relabeling", r.relabeling},
          {"horizon", round15(r.horizon)},
          {"step", round15(r.step)}};
}

Descriptor descriptor_from_json(const Json& j) {
  const Json& family = field(j, "family");
  if (!family.is_string()) throw InputError("\"family\" must be a string");
  const std::string name = family.get<std::string>();
  if (name == "circulant_c") {
    CirculantCDescriptor d;
    d.n = int_field(j, "n", 2, 4096);
    const Json& c = field(j, "c");
    if (!c.is_array()) throw InputError("\"c\" must be an array of integers");
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw InputError("\"c\" must be an array of integers");
      d.c.push_back(x.get<long long>());
    }
    if (static_cast<int>(d.c.size()) != d.n)
      throw InputError("\"c\" has length " + std::to_string(d.c.size()) + ", expected " +
                       std::to_string(d.n));
    return d;
  }
  if (name == "nondense") {
    NondenseDescriptor d{int_field(j, "p", 2, 1 << 15), int_field(j, "q", 2, 1 << 15)};
    if (!is_prime(d.p) || !is_prime(d.q) || d.p == d.q)
      throw InputError("nondense family needs two distinct primes p, q");
    return d;
  }
  if (name == "noncirculant") {
    NoncirculantParams d{int_field(j, "a", 0, 4096), int_field(j, "b", 0, 4096),
                         int_field(j, "beta", 0, 1 << 20)};
    d.validate();
    return d;
  }
  throw InputError("unknown family \"" + name + "\"");
}

Json to_json(const Descriptor& d) {
  if (const auto* x = std::get_if<CirculantCDescriptor>(&d))
    return {{"family", "circulant_c"}, {"n", x->n}, {"c", x->c}};
  if (const auto* x = std::get_if<NondenseDescriptor>(&d))
    return {{"family", "nondense"}, {"p", x->p}, {"q", x->q}};
  const auto& x = std::get<NoncirculantParams>(d);
  return {{"family", "noncirculant"}, {"a", x.a}, {"b", x.b}, {"beta", x.beta}};
}

GraphBundle build(const Descriptor& d) {
  if (const auto* x = std::get_if<CirculantCDescriptor>(&d))
    return circulant_bundle(circulant_from_c(x->n, x->c), d);
  if (const auto* x = std::get_if<NondenseDescriptor>(&d))
    return circulant_bundle(nondense_circulant(x->p, x->q), d);
  auto [graph, es] = noncirculant_graph(std::get<NoncirculantParams>(d));
  return GraphBundle{std::move(graph), std::move(es), d, 0};
}

GraphBundle shifted(const GraphBundle& bundle, const Rational& shift) {
  GraphBundle out{shift_diagonal(bundle.graph, shift), bundle.eigensystem, bundle.descriptor,
                  bundle.shift + shift};
  if (out.eigensystem) {
    const double s = shift.get_d();
    for (double& l : out.eigensystem->lambdas) l += s;
    if (out.eigensystem->exact_lambdas)
      for (auto& q : *out.eigensystem->exact_lambdas) q += shift;
  }
  return out;
}

Json to_json(const GraphBundle& b) {
  Json out = {{"n", b.graph.order()},
              {"matrix", matrix_to_json(b.graph.adjacency())},
              {"shift", rational_to_string(b.shift)}};
  if (b.graph.circulant()) out["circulant"] = to_json(*b.graph.circulant());
  if (b.eigensystem) out["eigensystem"] = to_json(*b.eigensystem);
  if (b.descriptor) out["descriptor"] = to_json(*b.descriptor);
  return out;
}

GraphBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph input must be a JSON object");
  if (j.contains("family")) return build(descriptor_from_json(j));

  std::optional<Descriptor> descriptor;
  if (j.contains("descriptor")) descriptor = descriptor_from_json(j.at("descriptor"));
  Rational shift = 0;
  if (j.contains("shift")) shift = rational_from_json(j.at("shift"));

  try {
    if (j.contains("circulant")) {
      const CirculantSpec spec = circulant_from_json(j.at("circulant"));
      HermitianGraph graph = circulant_to_graph(spec);
      if (j.contains("matrix")) {
        const Eigen::MatrixXcd m = matrix_from_json(j.at("matrix"));
        if (m.rows() != graph.order() || m.cols() != graph.order() ||
            (m - graph.adjacency()).cwiseAbs().maxCoeff() > 1e-9)
          throw InputError("\"matrix\" disagrees with the exact \"circulant\"");
      }
      std::optional<EigenSystem> es;
      if (j.contains("eigensystem")) es = eigensystem_from_json(j.at("eigensystem"));
      else es = circulant_eigensystem(spec);
      return GraphBundle{std::move(graph), std::move(es), descriptor, shift};
    }
    HermitianGraph graph = validate_hermitian(matrix_from_json(field(j, "matrix")));
    std::optional<EigenSystem> es;
    if (j.contains("eigensystem")) es = eigensystem_from_json(j.at("eigensystem"));
    return GraphBundle{std::move(graph), std::move(es), descriptor, shift};
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
}

}  // namespace upst
