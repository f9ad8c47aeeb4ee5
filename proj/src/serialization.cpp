#include "qhopf/serialization.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::uint32_t index_of(const Json& j, std::uint32_t bound) {
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v >= static_cast<std::int64_t>(bound)) throw ParseError("index " + std::to_string(v) + " out of range");
  return static_cast<std::uint32_t>(v);
}

Json vector_to_json(const std::vector<CycNumber>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(cyc_to_json(x));
  return out;
}

std::vector<CycNumber> vector_from_json(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) throw ParseError("expected an array of " + std::to_string(size) + " scalars");
  std::vector<CycNumber> out;
  for (const auto& x : j) out.push_back(cyc_from_json(x));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out.push_back(Json::array({r, c, cyc_to_json(m(r, c))}));
    }
  }
  return out;
}

Matrix matrix_from_json(const Json& j, std::uint32_t n) {
  Matrix m(n, n);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entries are [row, col, scalar]");
    m(index_of(e[0], n), index_of(e[1], n)) += cyc_from_json(e[2]);
  }
  return m;
}

/// Display width, counting each UTF-8 code point once.
std::size_t shown_width(const std::string& s) {
  std::size_t shown = 0;
  for (unsigned char ch : s) shown += (ch & 0xC0) != 0x80;
  return shown;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t shown = shown_width(s);
  return s + std::string(width > shown ? width - shown : 0, ' ');
}

}  // namespace

Json cyc_to_json(const CycNumber& x) {
  const CycNumber r = x.reduced();
  Json coeffs = Json::array();
  for (const auto& q : r.coeffs()) coeffs.push_back(to_string(q));
  return Json{{"conductor", r.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const Json& j) {
  return guarded("scalar", [&] {
    if (!j.is_object()) throw ParseError("scalar must be an object");
    const auto n = j.at("conductor").get<std::int64_t>();
    if (n <= 0) throw ParseError("conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else {
        coeffs.push_back(Rational(c.get<long>()));
      }
    }
    return CycNumber::from_coeffs(static_cast<std::uint32_t>(n), std::move(coeffs));
  });
}

Json tensor_to_json(const SparseTensor& t) {
  Json out = Json::array();
  for (const auto& [f, c] : t.entries()) {
    Json e = Json::array();
    for (auto i : t.unflat(f)) e.push_back(i);
    e.push_back(cyc_to_json(c));
    out.push_back(e);
  }
  return out;
}

SparseTensor tensor_from_json(const Json& j, std::uint32_t legs, std::uint32_t dim) {
  return guarded("tensor", [&] {
    if (!j.is_array()) throw ParseError("tensor must be an array of entries");
    SparseTensor shape(legs, dim);
    std::vector<SparseTensor::Entry> entries;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != legs + 1) throw ParseError("tensor entry has the wrong number of indices");
      std::vector<std::uint32_t> idx;
      for (std::uint32_t l = 0; l < legs; ++l) idx.push_back(index_of(e[l], dim));
      entries.emplace_back(shape.flat(idx), cyc_from_json(e[legs]));
    }
    return SparseTensor::from_entries(legs, dim, std::move(entries));
  });
}

Json algebra_to_json(const QuasiHopfAlgebra& h) {
  Json mult = Json::array();
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      for (const auto& [k, c] : h.product(i, j)) {
        if (!c.is_zero()) mult.push_back(Json::array({i, j, k, cyc_to_json(c)}));
      }
    }
  }
  Json coproduct = Json::array();
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    for (const auto& [f, c] : h.coproduct[i].entries()) {
      coproduct.push_back(Json::array({i, f / h.dim, f % h.dim, cyc_to_json(c)}));
    }
  }
  Json out;
  out["name"] = h.name;
  out["dim"] = h.dim;
  out["basis_labels"] = h.basis_labels;
  out["mult"] = mult;
  out["unit"] = tensor_to_json(h.unit);
  out["coproduct"] = coproduct;
  out["counit"] = vector_to_json(h.counit);
  out["associator"] = tensor_to_json(h.associator);
  out["alpha"] = tensor_to_json(h.alpha);
  out["beta"] = tensor_to_json(h.beta);
  out["antipode"] = matrix_to_json(h.antipode);
  return out;
}

QuasiHopfAlgebra algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    QuasiHopfAlgebra h;
    h.name = j.value("name", std::string("custom"));
    const auto d = j.at("dim").get<std::int64_t>();
    if (d <= 0 || d > 4096) throw ParseError("dim out of range");
    h.dim = static_cast<std::uint32_t>(d);
    if (j.contains("basis_labels")) h.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
    if (!h.basis_labels.empty() && h.basis_labels.size() != h.dim) throw ParseError("basis_labels size mismatch");

    std::vector<std::vector<SparseTensor::Entry>> mult(static_cast<std::size_t>(h.dim) * h.dim);
    for (const auto& e : j.at("mult")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("mult entries are [i, j, k, scalar]");
      const auto i = index_of(e[0], h.dim), jj = index_of(e[1], h.dim), k = index_of(e[2], h.dim);
      mult[static_cast<std::size_t>(i) * h.dim + jj].emplace_back(k, cyc_from_json(e[3]));
    }
    for (auto& m : mult) {
      SparseVec v;
      const SparseTensor row = SparseTensor::from_entries(1, h.dim, std::move(m));
      for (const auto& [k, c] : row.entries()) {
        v.emplace_back(static_cast<std::uint32_t>(k), c);
      }
      h.mult.push_back(std::move(v));
    }

    h.unit = tensor_from_json(j.at("unit"), 1, h.dim);
    std::vector<std::vector<SparseTensor::Entry>> cop(h.dim);
    for (const auto& e : j.at("coproduct")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("coproduct entries are [i, j, k, scalar]");
      const auto i = index_of(e[0], h.dim), a = index_of(e[1], h.dim), b = index_of(e[2], h.dim);
      cop[i].emplace_back(static_cast<std::uint64_t>(a) * h.dim + b, cyc_from_json(e[3]));
    }
    for (auto& c : cop) h.coproduct.push_back(SparseTensor::from_entries(2, h.dim, std::move(c)));
    h.counit = vector_from_json(j.at("counit"), h.dim);
    h.associator = tensor_from_json(j.at("associator"), 3, h.dim);
    h.alpha = tensor_from_json(j.at("alpha"), 1, h.dim);
    h.beta = tensor_from_json(j.at("beta"), 1, h.dim);
    h.antipode = matrix_from_json(j.at("antipode"), h.dim);
    try {
      finalize(h);
    } catch (const SingularMatrix& e) {
      throw ParseError(std::string("algebra: ") + e.what());
    }
    return h;
  });
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (std::uint32_t a = 0; a < g.order; ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return Json{{"name", g.name}, {"order", g.order}, {"labels", g.labels}, {"table", table}};
}

FiniteGroup group_from_json(const Json& j) {
  return guarded("group", [&] {
    const auto n = j.at("order").get<std::int64_t>();
    if (n <= 0 || n > 4096) throw ParseError("group order out of range");
    const auto order = static_cast<std::uint32_t>(n);
    const Json& rows = j.at("table");
    if (!rows.is_array() || rows.size() != order) throw ParseError("group table has the wrong number of rows");
    std::vector<std::uint32_t> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != order) throw ParseError("group table row has the wrong length");
      for (const auto& v : row) table.push_back(index_of(v, order));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    try {
      return group_from_table(j.value("name", std::string("G")), order, std::move(table), std::move(labels));
    } catch (const ValidationFailure& e) {
      throw ParseError(std::string("group: ") + e.what());
    }
  });
}

Json cocycle_to_json(const Cocycle3& w) {
  const std::uint32_t n = w.group.order;
  Json values = Json::array();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) values.push_back(Json::array({a, b, c, cyc_to_json(w(a, b, c))}));
    }
  }
  return Json{{"group", group_to_json(w.group)}, {"values", values}};
}

Cocycle3 cocycle_from_json(const Json& j) {
  Cocycle3 w = guarded("cocycle", [&] {
    Cocycle3 out = trivial_cocycle(group_from_json(j.at("group")));
    const std::uint32_t n = out.group.order;
    for (const auto& e : j.at("values")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("cocycle entries are [a, b, c, scalar]");
      out.at(index_of(e[0], n), index_of(e[1], n), index_of(e[2], n)) = cyc_from_json(e[3]);
    }
    return out;
  });
  validate_cocycle(w);
  return w;
}

Json characters_to_json(const std::vector<SimpleCharacter>& chars) {
  Json simples = Json::array();
  for (const auto& s : chars) simples.push_back(Json{{"dim", s.dim}, {"character", vector_to_json(s.character)}});
  return Json{{"simples", simples}};
}

std::string characters_to_text(const QuasiHopfAlgebra& h, const std::vector<SimpleCharacter>& chars) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"", "dim"};
  for (const auto& l : h.basis_labels) header.push_back(l);
  grid.push_back(header);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::vector<std::string> row{"V" + std::to_string(i), std::to_string(chars[i].dim)};
    for (const auto& v : chars[i].character) row.push_back(to_string(v));
    grid.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], shown_width(row[c]));
  }
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << pad(row[c], width[c]);
    os << "\n";
  }
  return os.str();
}

Json table_to_json(const IndicatorTable& t) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json cells = Json::array();
    for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) {
      const IndicatorCell& cell = t.at(r, n);
      Json c;
      c["n"] = n;
      c["value"] = cell.value ? cyc_to_json(*cell.value) : Json();
      c["display"] = cell.value ? to_string(*cell.value) : std::string("?");
      c["source"] = to_string(cell.source);
      if (!cell.note.empty()) c["note"] = cell.note;
      cells.push_back(c);
    }
    rows.push_back(Json{{"simple", r}, {"dim", t.rows[r].dim}, {"indicators", cells}});
  }
  return Json{{"algebra", t.algebra_name}, {"n_min", t.n_min}, {"n_max", t.n_max}, {"rows", rows}};
}

std::string table_to_markdown(const IndicatorTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"simple", "dim"};
  for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) header.push_back("ν_" + std::to_string(n));
  grid.push_back(header);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> row{"V" + std::to_string(r), std::to_string(t.rows[r].dim)};
    for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) {
      const IndicatorCell& cell = t.at(r, n);
      row.push_back(cell.value ? to_string(*cell.value) : std::string("?"));
    }
    grid.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 3);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], shown_width(row[c]));
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    os << "|";
    for (std::size_t c = 0; c < row.size(); ++c) os << " " << pad(row[c], width[c]) << " |";
    os << "\n";
  };
  emit(grid[0]);
  os << "|";
  for (std::size_t c = 0; c < width.size(); ++c) os << std::string(width[c] + 2, '-') << "|";
  os << "\n";
  for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
  return os.str();
}

}  // namespace qhopf
