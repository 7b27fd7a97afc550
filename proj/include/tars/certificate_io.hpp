#pragma once

// Certificate file format: JSON with the seed graph embedded so a
// certificate can be re-verified without the original input.
//
//   {
//     "seed": {"order": 4, "edges": [[0,1],[0,2],[0,3]]},
//     "mode": "TARS",
//     "N": 9,
//     "cycles": {"3": [0,1,4], ...},
//     "provenance": {"3": "constructed", ...}
//   }

#include <fstream>

#include "json.hpp"
#include "tars/cycle_search.hpp"

namespace tars {

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order;
  auto edges = nlohmann::ordered_json::array();
  for (int u = 0; u < g.order; ++u)
    for (int v = u + 1; v < g.order; ++v)
      if (g.adjacent(u, v)) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g(j.at("order").get<int>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  g.validate();
  return g;
}

inline nlohmann::ordered_json certificate_to_json(const Graph& seed, Mode mode,
                                                  const PancyclicCertificate& cert) {
  nlohmann::ordered_json j;
  j["seed"] = graph_to_json(seed);
  j["mode"] = mode_name(mode);
  j["N"] = cert.vertex_count;
  nlohmann::ordered_json cycles = nlohmann::ordered_json::object();
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  for (const auto& [len, cyc] : cert.cycles) {
    cycles[std::to_string(len)] = cyc;
    auto it = cert.provenance.find(len);
    prov[std::to_string(len)] =
        provenance_name(it == cert.provenance.end() ? Provenance::Searched : it->second);
  }
  j["cycles"] = std::move(cycles);
  j["provenance"] = std::move(prov);
  return j;
}

struct CertificateFile {
  Graph seed;
  Mode mode = Mode::TARS;
  PancyclicCertificate certificate;
};

inline Mode mode_from_name(const std::string& s) {
  if (s == "TARS") return Mode::TARS;
  if (s == "TAR") return Mode::TAR;
  if (s == "TS") return Mode::TS;
  throw std::invalid_argument("unknown mode \"" + s + "\"");
}

inline CertificateFile certificate_from_json(const nlohmann::json& j) {
  CertificateFile f;
  f.seed = graph_from_json(j.at("seed"));
  f.mode = mode_from_name(j.at("mode").get<std::string>());
  f.certificate.vertex_count = j.at("N").get<int>();
  for (const auto& [key, val] : j.at("cycles").items()) {
    int len = std::stoi(key);
    f.certificate.cycles[len] = val.get<Cycle>();
  }
  if (j.contains("provenance"))
    for (const auto& [key, val] : j.at("provenance").items()) {
      std::string p = val.get<std::string>();
      f.certificate.provenance[std::stoi(key)] =
          p == "constructed" ? Provenance::Constructed : Provenance::Searched;
    }
  return f;
}

inline std::string certificate_to_string(const Graph& seed, Mode mode,
                                         const PancyclicCertificate& cert) {
  return certificate_to_json(seed, mode, cert).dump(1) + "\n";
}

inline CertificateFile load_certificate(std::istream& in) {
  nlohmann::json j;
  in >> j;
  return certificate_from_json(j);
}

inline CertificateFile load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file " + path);
  return load_certificate(in);
}

}  // namespace tars
