#pragma once

#include <fstream>
#include <numeric>

#include <json.hpp>

#include "msset.hpp"
#include "nu_cells.hpp"

namespace orient {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json matrix_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

inline IntMatrix matrix_from_rows(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw FormatError(what + ": expected " + std::to_string(rows) + " rows");
  std::vector<Vec> rs;
  for (const auto& r : j) {
    auto v = r.get<Vec>();
    if (v.size() != cols) throw FormatError(what + ": expected rows of length " + std::to_string(cols));
    rs.push_back(std::move(v));
  }
  return IntMatrix::from_rows(rs, cols);
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace detail

inline Json to_json(const BasedComplex& c) {
  Json d = Json::array();
  for (int q = 0; q < c.max_degree(); ++q) d.push_back(detail::matrix_rows(c.differential(q)));
  return {{"max_degree", c.max_degree()},
          {"truncated", c.truncated()},
          {"basis", c.bases()},
          {"differentials", d},
          {"augmentation", c.augmentation()}};
}

inline BasedComplex complex_from_json(const Json& j) {
  try {
    const int n = detail::field<int>(j, "max_degree");
    auto basis = detail::field<std::vector<std::vector<std::string>>>(j, "basis");
    if (basis.size() != static_cast<std::size_t>(n) + 1) throw FormatError("basis has the wrong number of degrees");
    const Json& dj = j.at("differentials");
    if (!dj.is_array() || dj.size() != static_cast<std::size_t>(n)) throw FormatError("expected one differential per positive degree");
    std::vector<IntMatrix> diff;
    for (int q = 0; q < n; ++q)
      diff.push_back(detail::matrix_from_rows(dj[q], basis[q].size(), basis[q + 1].size(), "differential " + std::to_string(q)));
    return BasedComplex(n, std::move(basis), std::move(diff), detail::field<Vec>(j, "augmentation"),
                        j.value("truncated", false));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed complex: ") + e.what());
  } catch (const StructuralError& e) {
    throw FormatError(std::string("malformed complex: ") + e.what());
  }
}

inline Json to_json(const AdcMorphism& f) {
  Json mats = Json::array();
  for (const auto& m : f.matrices()) mats.push_back(detail::matrix_rows(m));
  return {{"source", to_json(*f.source())}, {"target", to_json(*f.target())}, {"matrices", mats}};
}

inline AdcMorphism morphism_from_json(const Json& j) {
  auto src = share(complex_from_json(j.at("source")));
  auto tgt = share(complex_from_json(j.at("target")));
  const Json& mj = j.at("matrices");
  if (!mj.is_array() || mj.size() != static_cast<std::size_t>(src->max_degree()) + 1)
    throw FormatError("expected one matrix per source degree");
  std::vector<IntMatrix> mats;
  for (int q = 0; q <= src->max_degree(); ++q)
    mats.push_back(detail::matrix_from_rows(mj[q], tgt->rank(q), src->rank(q), "matrix " + std::to_string(q)));
  return AdcMorphism(src, tgt, std::move(mats));
}

inline Json to_json(const SteinerTable& x) { return {{"dim", x.dim}, {"minus", x.minus}, {"plus", x.plus}}; }

inline SteinerTable table_from_json(const Json& j) {
  SteinerTable x;
  x.dim = detail::field<int>(j, "dim");
  x.minus = detail::field<std::vector<Vec>>(j, "minus");
  x.plus = detail::field<std::vector<Vec>>(j, "plus");
  if (x.minus.size() != static_cast<std::size_t>(x.dim) + 1 || x.plus.size() != x.minus.size())
    throw FormatError("table rows do not match its dimension");
  return x;
}

inline Json to_json(const SimplexRef& s) { return {{"id", s.id}, {"map", s.map}}; }
inline SimplexRef ref_from_json(const Json& j) { return {detail::field<int>(j, "id"), detail::field<std::vector<int>>(j, "map")}; }

inline Json to_json(const MarkedSimplicialSet& x) {
  Json simplices = Json::array();
  for (std::size_t id = 0; id < x.size(); ++id) {
    const auto& s = x[static_cast<int>(id)];
    Json faces = Json::array();
    for (const auto& f : s.faces) faces.push_back(to_json(f));
    Json e = {{"id", id}, {"dim", s.dim}, {"marked", s.marked}, {"faces", faces}};
    if (!s.name.empty()) e["name"] = s.name;
    simplices.push_back(e);
  }
  Json j = {{"simplices", simplices}};
  if (x.cutoff() != kNoCutoff) j["cutoff"] = x.cutoff();
  return j;
}

inline MarkedSimplicialSet msset_from_json(const Json& j) {
  MarkedSimplicialSet x;
  int expected = 0;
  for (const auto& e : j.at("simplices")) {
    if (detail::field<int>(e, "id") != expected++) throw FormatError("simplex ids must be consecutive from 0");
    std::vector<SimplexRef> faces;
    for (const auto& f : e.at("faces")) faces.push_back(ref_from_json(f));
    x.add(detail::field<int>(e, "dim"), std::move(faces), e.value("marked", false), e.value("name", std::string{}));
  }
  if (j.contains("cutoff")) x.set_cutoff(j.at("cutoff").get<int>());
  return x;
}

inline Json to_json(const MssetMap& f) {
  Json images = Json::array();
  for (const auto& s : f.images) images.push_back(to_json(s));
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"images", images}};
}

inline MssetMap msset_map_from_json(const Json& j) {
  MssetMap f;
  f.source = share(msset_from_json(j.at("source")));
  f.target = share(msset_from_json(j.at("target")));
  for (const auto& s : j.at("images")) f.images.push_back(ref_from_json(s));
  return f;
}

// A set embedded in an ambient one, written in ambient ids and sorted, so that two
// embeddings with the same image encode identically.
inline std::string canonical_json(const MssetMap& into) {
  std::vector<int> amb(into.source->size());
  for (std::size_t id = 0; id < amb.size(); ++id) amb[id] = into.images[id].id;
  std::vector<std::size_t> order(amb.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return amb[a] < amb[b]; });
  Json out = Json::array();
  for (std::size_t id : order) {
    const auto& s = (*into.source)[static_cast<int>(id)];
    Json faces = Json::array();
    for (const auto& f : s.faces) faces.push_back({{"id", amb[f.id]}, {"map", f.map}});
    out.push_back({{"id", amb[id]}, {"dim", s.dim}, {"marked", s.marked}, {"faces", faces}});
  }
  return out.dump();
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace orient
