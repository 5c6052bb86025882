#include "diskarg/json_io.hpp"

#include "diskarg/errors.hpp"

namespace diskarg {

namespace {

using nlohmann::json;

const char* tail_name(TailKind k) {
  switch (k) {
    case TailKind::none: return "none";
    case TailKind::geometric: return "geometric";
    case TailKind::power: return "power";
  }
  return "none";
}

template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

}  // namespace

json to_json(const ZeroSequence& zs) {
  json zeros = json::array();
  for (const cplx a : zs.zeros()) zeros.push_back({a.real(), a.imag()});
  const TailDescriptor& t = zs.tail();
  return {{"zeros", zeros},
          {"tail", {{"kind", tail_name(t.kind)}, {"param", t.param}, {"count", t.count}}}};
}

ZeroSequence zeros_from_json(const json& j) {
  return parsing([&] {
    std::vector<cplx> zeros;
    for (const json& z : j.at("zeros")) {
      if (!z.is_array() || z.size() != 2) throw Error(ErrorKind::parse_error, "zero must be [re, im]");
      zeros.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    TailDescriptor tail;
    if (j.contains("tail")) {
      const json& t = j.at("tail");
      const std::string kind = t.value("kind", "none");
      if (kind == "none") tail.kind = TailKind::none;
      else if (kind == "geometric") tail.kind = TailKind::geometric;
      else if (kind == "power") tail.kind = TailKind::power;
      else throw Error(ErrorKind::parse_error, "unknown tail kind '" + kind + "'");
      tail.param = t.value("param", 0.0);
      tail.count = t.value("count", std::size_t{0});
    }
    return ZeroSequence(std::move(zeros), tail);
  });
}

json to_json(const BoundaryMeasure& m) {
  json atoms = json::array();
  for (const Atom& a : m.atoms()) atoms.push_back({a.theta, a.mass});
  return {{"atoms", atoms},
          {"cdf",
           {{"breakpoints", std::vector<double>(m.breakpoints().begin(), m.breakpoints().end())},
            {"values", std::vector<double>(m.values().begin(), m.values().end())}}}};
}

BoundaryMeasure measure_from_json(const json& j) {
  return parsing([&] {
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
      for (const json& a : j.at("atoms")) {
        if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::parse_error, "atom must be [theta, mass]");
        atoms.push_back({a[0].get<double>(), a[1].get<double>()});
      }
    }
    std::vector<double> bps;
    std::vector<double> vals;
    if (j.contains("cdf")) {
      bps = j.at("cdf").at("breakpoints").get<std::vector<double>>();
      vals = j.at("cdf").at("values").get<std::vector<double>>();
    }
    return BoundaryMeasure(std::move(atoms), std::move(bps), std::move(vals));
  });
}

json to_json(const BoundedFunctionSpec& spec) {
  return {{"C", spec.scale},
          {"p", spec.origin_order},
          {"Cprime", spec.phase},
          {"zeros", to_json(spec.zeros)},
          {"boundary", to_json(spec.boundary)}};
}

BoundedFunctionSpec spec_from_json(const json& j) {
  return parsing([&] {
    BoundedFunctionSpec spec;
    spec.scale = j.value("C", 1.0);
    spec.origin_order = j.value("p", 0);
    spec.phase = j.value("Cprime", 0.0);
    if (j.contains("zeros")) spec.zeros = zeros_from_json(j.at("zeros"));
    if (j.contains("boundary")) spec.boundary = measure_from_json(j.at("boundary"));
    spec.validate();
    return spec;
  });
}

}  // namespace diskarg
