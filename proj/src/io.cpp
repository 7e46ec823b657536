#include <tfact/io.hpp>

#include <fstream>

namespace tfact {

using nlohmann::json;

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(errc::parse_error, "complex values must be [re, im] arrays");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(errc::parse_error, "matrix row count mismatch");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      fail(errc::parse_error, "matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

void save_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << j.dump(2) << "\n";
}

} // namespace

json symbol_to_json(const CircleFunction& f) {
  json j;
  j["rows"] = f.rows();
  j["cols"] = f.cols();
  j["kind"] = f.is_laurent() ? "laurent" : "rational";
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"power", t.power}, {"matrix", matrix_to_json(t.coeff)}});
  j["terms"] = std::move(terms);
  if (!f.is_laurent()) {
    json denom = json::array();
    for (size_t k = 0; k < f.denominator().size(); ++k) {
      if (f.denominator()[k] == cplx(0.0)) continue;
      denom.push_back({{"power", static_cast<int>(k)}, {"value", complex_to_json(f.denominator()[k])}});
    }
    j["denominator"] = std::move(denom);
  }
  return j;
}

CircleFunction symbol_from_json(const json& j) {
  try {
    if (!j.is_object()) fail(errc::parse_error, "symbol must be a JSON object");
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("kind"))
      fail(errc::parse_error, "symbol requires rows, cols and kind");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (rows < 1 || cols < 1) fail(errc::parse_error, "rows and cols must be positive");

    std::vector<LaurentTerm> terms;
    for (const auto& t : j.value("terms", json::array())) {
      if (!t.contains("power") || !t.contains("matrix"))
        fail(errc::parse_error, "each term requires power and matrix");
      terms.push_back({t.at("power").get<int>(), matrix_from_json(t.at("matrix"), rows, cols)});
    }

    if (kind == "laurent") return CircleFunction::laurent(rows, cols, std::move(terms));
    if (kind != "rational") fail(errc::parse_error, "kind must be laurent or rational");

    std::vector<cplx> denom;
    for (const auto& d : j.value("denominator", json::array())) {
      if (!d.contains("power") || !d.contains("value"))
        fail(errc::parse_error, "each denominator entry requires power and value");
      const int p = d.at("power").get<int>();
      if (p < 0) fail(errc::parse_error, "denominator powers must be nonnegative");
      if (static_cast<int>(denom.size()) <= p) denom.resize(p + 1, cplx(0.0));
      denom[p] = complex_from_json(d.at("value"));
    }
    return CircleFunction::rational(rows, cols, std::move(terms), std::move(denom));
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("malformed symbol: ") + e.what());
  }
}

namespace {

json block_to_json(const LiftedBlock& b) {
  json j;
  j["offset"] = b.offset;
  j["v"] = symbol_to_json(b.inner.v);
  j["theta"] = b.inner.theta ? symbol_to_json(*b.inner.theta) : json(nullptr);
  j["side"] = b.inner.side == BlockSide::left ? "left" : "right";
  return j;
}

LiftedBlock block_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("v") || !j.contains("side"))
    fail(errc::parse_error, "block requires offset, v and side");
  ThematicBlock inner;
  inner.v = symbol_from_json(j.at("v"));
  inner.size = inner.v.rows();
  if (j.contains("theta") && !j.at("theta").is_null())
    inner.theta = symbol_from_json(j.at("theta"));
  const std::string side = j.at("side").get<std::string>();
  if (side != "left" && side != "right") fail(errc::parse_error, "side must be left or right");
  inner.side = side == "left" ? BlockSide::left : BlockSide::right;
  return {j.at("offset").get<int>(), std::move(inner)};
}

} // namespace

json bundle_to_json(const FactorBundle& b) {
  json j;
  j["m"] = b.m;
  j["n"] = b.n;
  json left = json::array(), right = json::array(), diag = json::array();
  for (const auto& w : b.left) left.push_back(block_to_json(w));
  for (const auto& v : b.right) right.push_back(block_to_json(v));
  for (const auto& slot : b.diag)
    diag.push_back({{"t", slot.t}, {"u", symbol_to_json(slot.u)}});
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  j["diag"] = std::move(diag);
  j["residual"] = b.residual ? symbol_to_json(*b.residual) : json(nullptr);
  return j;
}

FactorBundle bundle_from_json(const json& j) {
  try {
    if (!j.is_object()) fail(errc::parse_error, "bundle must be a JSON object");
    for (const char* key : {"m", "n", "left", "right", "diag"})
      if (!j.contains(key)) fail(errc::parse_error, std::string("bundle requires ") + key);
    FactorBundle b;
    b.m = j.at("m").get<int>();
    b.n = j.at("n").get<int>();
    for (const auto& w : j.at("left")) b.left.push_back(block_from_json(w));
    for (const auto& v : j.at("right")) b.right.push_back(block_from_json(v));
    for (const auto& d : j.at("diag")) {
      if (!d.contains("t") || !d.contains("u"))
        fail(errc::parse_error, "each diag slot requires t and u");
      b.diag.push_back({d.at("t").get<double>(), symbol_from_json(d.at("u"))});
    }
    if (j.contains("residual") && !j.at("residual").is_null())
      b.residual = symbol_from_json(j.at("residual"));
    return b;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("malformed bundle: ") + e.what());
  }
}

CircleFunction load_symbol(const std::string& path) { return symbol_from_json(load_file(path)); }
FactorBundle load_bundle(const std::string& path) { return bundle_from_json(load_file(path)); }

void save_symbol(const CircleFunction& f, const std::string& path) {
  save_file(symbol_to_json(f), path);
}

void save_bundle(const FactorBundle& b, const std::string& path) {
  save_file(bundle_to_json(b), path);
}

} // namespace tfact
