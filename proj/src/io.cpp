#include "orbitlab/io.hpp"

#include "orbitlab/errors.hpp"

namespace orbitlab::io {

namespace {

// Line and column of a byte offset, both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

json to_json(const RepVector& v) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms()) {
    json mono = json::array();
    for (std::size_t j = 0; j < m.e1.size(); ++j) mono.push_back({m.e1[j], v.space().degrees()[j] - m.e1[j]});
    terms.push_back({{"coef", c.to_string()}, {"monomial", std::move(mono)}});
  }
  return {{"space", v.space().degrees()}, {"terms", std::move(terms)}};
}

RepVector vector_from_json(const json& j) {
  try {
    const RepSpace space(j.at("space").get<std::vector<int>>());
    RepVector v(space);
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string where = "terms[" + std::to_string(k) + "]";
      const json& term = terms[k];
      Scalar coef;
      try {
        coef = Scalar::parse(term.at("coef").get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + ".coef: " + e.what(), e.line(), e.column());
      }
      const auto pairs = term.at("monomial").get<std::vector<std::vector<int>>>();
      if (pairs.size() != space.factors()) throw ParseError(where + ".monomial: wrong number of factors");
      Monomial m;
      for (std::size_t f = 0; f < pairs.size(); ++f) {
        if (pairs[f].size() != 2 || pairs[f][0] < 0 || pairs[f][1] < 0 ||
            pairs[f][0] + pairs[f][1] != space.degrees()[f]) {
          throw ParseError(where + ".monomial: exponents must be [a,b] with a+b = " +
                           std::to_string(space.degrees()[f]));
        }
        m.e1.push_back(pairs[f][0]);
      }
      v.add(m, coef);
    }
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("vector JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("vector JSON: ") + e.what());
  }
}

RepVector parse_vector(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte);
    throw ParseError("vector JSON line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                     line, col);
  }
  return vector_from_json(j);
}

json to_json(const LieAlgebraElement& x) {
  json blocks = json::array();
  for (const auto& m : x.blocks()) {
    blocks.push_back({{m[0].to_string(), m[1].to_string()}, {m[2].to_string(), m[3].to_string()}});
  }
  return blocks;
}

json to_json(const OrbitReport& r) {
  json iso = json::array();
  for (const auto& x : r.isotropy_basis) iso.push_back(to_json(x));
  return {{"orbit_real_dim", r.orbit_real_dim},
          {"ambient_complex_dim", r.ambient_complex_dim},
          {"moment_map_zero", r.moment_map_zero},
          {"isotropic", r.isotropic},
          {"lagrangian", r.lagrangian},
          {"isotropy_basis", std::move(iso)}};
}

json to_json(const TangentFrame& f) {
  json frame = json::array();
  for (std::size_t k = 0; k < f.frame.size(); ++k) {
    frame.push_back({{"name", f.names[k]}, {"element", to_json(f.frame[k])}});
  }
  return {{"point", to_json(f.point)},
          {"frame", std::move(frame)},
          {"gram", matrix_json(f.gram)},
          {"curvature", rational_json(f.curvature)},
          {"gram_identity", f.gram_is_identity()}};
}

json to_json(const SphericalSubspace& s) {
  json basis = json::array();
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    basis.push_back({{"p", s.labels[k].first}, {"q", s.labels[k].second}, {"vector", to_json(s.basis[k])}});
  }
  return {{"ell", s.ell}, {"n", s.n}, {"d_rho", s.d_rho}, {"m_rho", s.m_rho}, {"basis", std::move(basis)}};
}

json to_json(const EigenRecord& r) {
  return {{"ell", r.ell}, {"n", r.n}, {"q", r.q}, {"p", r.p}, {"lambda", rational_json(r.lambda)}};
}

json to_json(const StabilityReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json records = json::array();
  for (const auto& w : r.records) records.push_back(to_json(w));
  json cells = json::array();
  for (const auto& [l, n] : r.cells) cells.push_back({l, n});
  return {{"lambda1", rational_json(r.lambda1)},
          {"witnesses", std::move(witnesses)},
          {"records", std::move(records)},
          {"cells", std::move(cells)},
          {"threshold", rational_json(r.threshold)},
          {"einstein_constant", rational_json(r.einstein_constant)},
          {"verdict", to_string(r.verdict)},
          {"at_bound", r.at_bound},
          {"ambient_complex_dim", r.ambient_complex_dim},
          {"curvature", rational_json(r.curvature)},
          {"multiplicity", r.multiplicity},
          {"notes", r.notes}};
}

json to_json(const castling::Triplet& t) {
  json j = {{"literal", t.literal()},
            {"core", t.core_literal()},
            {"m", t.m},
            {"n", t.n},
            {"dual", t.dual},
            {"rep_dim", castling::rep_dim(t)},
            {"reduced", castling::is_reduced(t)},
            {"flag", castling::to_string(t.flag)},
            {"provenance", t.provenance}};
  if (auto g = castling::core_group_dim(t)) j["naive_generic_isotropy_dim"] = castling::naive_generic_isotropy_dim(t, *g);
  return j;
}

}  // namespace orbitlab::io
