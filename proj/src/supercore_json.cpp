#include "superein/supercore_json.hpp"

namespace superein {

namespace {

constexpr double k_drop = 1e-14;

Tri tri_from_string(const std::string& s)
{
  if (s == "true") {
    return Tri::True;
  }
  if (s == "false") {
    return Tri::False;
  }
  return Tri::Unchecked;
}

IdealKind kind_from_string(const std::string& s)
{
  if (s == "abelian") {
    return IdealKind::Abelian;
  }
  if (s == "simple") {
    return IdealKind::Simple;
  }
  throw InputError("unknown ideal kind '" + s + "'");
}

} // namespace

nlohmann::json algebra_to_json(const LieSuperAlgebra& alg)
{
  using nlohmann::json;
  const SuperBasis& basis = alg.basis();
  json doc;
  doc["dim_even"] = basis.n_even();
  doc["dim_odd"] = basis.n_odd();
  json parity = json::array();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    parity.push_back(parity_bit(basis.parity(i)));
  }
  doc["parity"] = parity;
  doc["labels"] = basis.labels();
  json c = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      for (const auto& e : alg.bracket_of_basis(i, j)) {
        if (std::abs(e.value) >= k_drop) {
          c.push_back({i, j, e.index, e.value.real(), e.value.imag()});
        }
      }
    }
  }
  doc["c"] = c;
  json dec = json::array();
  for (const auto& b : alg.decomposition()) {
    dec.push_back({b.begin, b.end, to_string(b.kind)});
  }
  doc["decomposition"] = dec;
  json names = json::array();
  for (const auto& b : alg.decomposition()) {
    names.push_back(b.name);
  }
  doc["ideal_names"] = names;
  return doc;
}

LieSuperAlgebra algebra_from_json(const nlohmann::json& doc)
{
  try {
    const auto n_even = doc.at("dim_even").get<std::size_t>();
    const auto n_odd = doc.at("dim_odd").get<std::size_t>();
    std::vector<Parity> parities;
    for (const auto& p : doc.at("parity")) {
      parities.push_back(p.get<int>() ? Parity::Odd : Parity::Even);
    }
    if (parities.size() != n_even + n_odd) {
      throw InputError("algebra_from_json: parity list length mismatch");
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      labels = doc.at("labels").get<std::vector<std::string>>();
    }
    SuperBasis basis = SuperBasis::from_parities(parities, labels);
    if (basis.n_even() != n_even) {
      throw InputError("algebra_from_json: parity list disagrees with dim_even");
    }
    std::vector<LieSuperAlgebra::Triplet> entries;
    for (const auto& t : doc.at("c")) {
      entries.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(), t.at(2).get<std::size_t>(),
                         Complex(t.at(3).get<double>(), t.at(4).get<double>())});
    }
    std::vector<IdealBlock> dec;
    const auto& raw = doc.at("decomposition");
    for (std::size_t idx = 0; idx < raw.size(); ++idx) {
      IdealBlock b;
      b.begin = raw[idx].at(0).get<std::size_t>();
      b.end = raw[idx].at(1).get<std::size_t>();
      b.kind = kind_from_string(raw[idx].at(2).get<std::string>());
      if (doc.contains("ideal_names") && idx < doc["ideal_names"].size()) {
        b.name = doc["ideal_names"][idx].get<std::string>();
      }
      dec.push_back(b);
    }
    return LieSuperAlgebra::from_numeric(std::move(basis), entries, std::move(dec));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("algebra_from_json: ") + ex.what());
  }
}

nlohmann::json form_to_json(const BilinearFormMatrix& form)
{
  using nlohmann::json;
  json doc;
  doc["dim"] = form.dim();
  json gram = json::array();
  for (Eigen::Index i = 0; i < form.gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < form.gram.cols(); ++j) {
      const Complex v = form.gram(i, j);
      if (std::abs(v) >= k_drop) {
        gram.push_back({i, j, v.real(), v.imag()});
      }
    }
  }
  doc["gram"] = gram;
  doc["flags"] = {{"even", to_string(form.flags.even)},
                  {"supersymmetric", to_string(form.flags.supersymmetric)},
                  {"bi_invariant", to_string(form.flags.bi_invariant)},
                  {"nondegenerate", to_string(form.flags.nondegenerate)}};
  return doc;
}

BilinearFormMatrix form_from_json(const nlohmann::json& doc)
{
  try {
    const auto n = doc.at("dim").get<Eigen::Index>();
    BilinearFormMatrix form;
    form.gram = CMatrix::Zero(n, n);
    for (const auto& t : doc.at("gram")) {
      const auto i = t.at(0).get<Eigen::Index>();
      const auto j = t.at(1).get<Eigen::Index>();
      if (i < 0 || j < 0 || i >= n || j >= n) {
        throw InputError("form_from_json: index out of range");
      }
      form.gram(i, j) = Complex(t.at(2).get<double>(), t.at(3).get<double>());
    }
    if (doc.contains("flags")) {
      const auto& f = doc["flags"];
      form.flags.even = tri_from_string(f.value("even", "unchecked"));
      form.flags.supersymmetric = tri_from_string(f.value("supersymmetric", "unchecked"));
      form.flags.bi_invariant = tri_from_string(f.value("bi_invariant", "unchecked"));
      form.flags.nondegenerate = tri_from_string(f.value("nondegenerate", "unchecked"));
    }
    return form;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("form_from_json: ") + ex.what());
  }
}

} // namespace superein
