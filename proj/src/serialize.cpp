#include "weilbound/serialize.hpp"

#include <fstream>
#include <sstream>

namespace weilbound {

namespace {

Integer integer_from_json(const Json& v) {
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.dump());
  throw std::invalid_argument("coefficient must be a decimal string or an integer");
}

const Json& coeff_array(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument("polynomial must be an object with a \"coeffs\" array");
  }
  return j.at("coeffs");
}

Json matrix_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string finish(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const RatPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return Json{{"coeffs", std::move(coeffs)}};
}

IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& v : coeff_array(j)) c.push_back(integer_from_json(v));
  return IntPoly(std::move(c));
}

RatPoly rat_poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& v : coeff_array(j)) {
    if (v.is_object()) {
      if (!v.contains("num") || !v.contains("den")) throw std::invalid_argument("rational needs \"num\" and \"den\"");
      c.push_back(make_rational(integer_from_json(v.at("num")), integer_from_json(v.at("den"))));
    } else {
      c.push_back(Rational(integer_from_json(v)));
    }
  }
  return RatPoly(std::move(c));
}

IntPoly read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read polynomial file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
  return int_poly_from_json(j);
}

std::string census_json(const std::vector<IntPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return finish(out);
}

std::string census_csv(const WeilParams& params, const std::vector<IntPoly>& polys) {
  const int n = 2 * params.g;
  std::ostringstream out;
  out << "g,q";
  for (int i = 0; i <= n; ++i) out << ",a" << i;
  out << '\n';
  for (const auto& p : polys) {
    WEILBOUND_CHECK(p.degree() == n, "census polynomial of the wrong degree");
    out << params.g << ',' << params.q.get_str();
    for (int i = 0; i <= n; ++i) out << ',' << p.coeff(static_cast<std::size_t>(n - i)).get_str();
    out << '\n';
  }
  return out.str();
}

std::string count_json(const WeilParams& params, std::size_t count) {
  return finish(Json{{"g", params.g},
                     {"q", params.q.get_str()},
                     {"count", count},
                     {"bound", "upper bound on isogeny classes; realizability is not checked"}});
}

std::string count_csv(const WeilParams& params, std::size_t count) {
  return "g,q,count\n" + std::to_string(params.g) + "," + params.q.get_str() + "," + std::to_string(count) + "\n";
}

std::string bounds_json(const BoundsReport& r) {
  Json out{{"N0", r.N0.get_str()}, {"discQ", r.discQ.get_str()}, {"N1", r.N1.get_str()},
           {"D", r.D.get_str()},   {"N", r.N.get_str()},         {"prime_cutoff", r.prime_cutoff}};
  Json table = Json::array();
  for (const auto& e : r.per_prime) table.push_back(Json{{"l", e.l}, {"s1", e.s1}, {"s2", e.s2}, {"e", e.e()}});
  out["per_prime"] = std::move(table);
  for (const auto& e : r.per_prime) {
    out["s1@" + std::to_string(e.l)] = e.s1;
    out["s2@" + std::to_string(e.l)] = e.s2;
  }
  return finish(out);
}

std::string factor_json(const std::vector<FactorPower>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(Json{{"factor", to_json(f.factor)}, {"exponent", f.exponent}});
  return finish(out);
}

std::string lattices_json(const FrobeniusMatrix& c, const std::vector<LatticeBasis>& lattices,
                          const std::vector<InducedAction>& actions, const ActionClassification* classification,
                          unsigned long l, int k) {
  WEILBOUND_CHECK(lattices.size() == actions.size(), "one induced action per lattice");
  Json out = Json::array();
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    Json rec{{"l", l}, {"k", k}, {"charpoly", to_json(c.charpoly)}, {"hnf", matrix_rows(lattices[i].basis)},
             {"index", determinant(lattices[i].basis).get_str()}, {"profile", actions[i].profile}};
    rec["class_id"] = classification ? Json(classification->class_of[i]) : Json(nullptr);
    out.push_back(std::move(rec));
  }
  return finish(out);
}

}  // namespace weilbound
