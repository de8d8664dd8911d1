#include "graded/io.hpp"

#include <fstream>
#include <sstream>

#include "graded/error.hpp"

namespace graded {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) invalid_input(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

PrimeField::Elem parse_scalar(const PrimeField& f, const Json& j) {
  if (!j.is_number_integer()) invalid_input("GF(p) scalars must be integers");
  auto v = j.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= f.order())
    invalid_input("scalar " + std::to_string(v) + " outside [0, p)");
  return static_cast<PrimeField::Elem>(v);
}

RationalField::Elem parse_scalar(const RationalField& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) invalid_input("rational scalars must be strings \"n/d\" or integers");
  return f.parse(j.get<std::string>());
}

template <Field F>
Vec<F> parse_vector(const F& f, const Json& j, std::size_t len, const std::string& what) {
  if (!j.is_array()) invalid_input(what + " must be an array");
  if (j.size() != len)
    invalid_input(what + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(len));
  Vec<F> v;
  v.reserve(len);
  for (const auto& x : j) v.push_back(parse_scalar(f, x));
  return v;
}

int parse_element(const FiniteGroup& g, const Json& j) {
  if (j.is_string()) {
    int i = g.index_of(j.get<std::string>());
    if (i < 0) invalid_input("unknown group element '" + j.get<std::string>() + "'");
    return i;
  }
  auto i = as_index(j, "group element");
  if (i >= static_cast<std::size_t>(g.order())) invalid_input("group element index out of range");
  return static_cast<int>(i);
}

FiniteGroup parse_group(const Json& j) {
  const auto& names_j = member(j, "names");
  const auto& table_j = member(j, "table");
  if (!names_j.is_array() || !table_j.is_array()) invalid_input("group names and table must be arrays");
  std::vector<std::string> names;
  for (const auto& n : names_j) {
    if (!n.is_string()) invalid_input("group element names must be strings");
    names.push_back(n.get<std::string>());
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : table_j) {
    if (!row.is_array()) invalid_input("group table rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(as_index(x, "group table entry")));
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(names), std::move(table));
}

template <Field F>
GradedAlgebra<F> parse_algebra(const F& f, const Json& j) {
  auto group = parse_group(member(j, "group"));
  const auto& comps = member(j, "components");
  if (!comps.is_object()) invalid_input("components must be an object");
  std::vector<std::size_t> dims(static_cast<std::size_t>(group.order()), 0);
  std::vector<bool> seen(dims.size(), false);
  for (const auto& [name, d] : comps.items()) {
    int g = group.index_of(name);
    if (g < 0) invalid_input("component for unknown group element '" + name + "'");
    dims[static_cast<std::size_t>(g)] = as_index(d, "component dimension");
    seen[static_cast<std::size_t>(g)] = true;
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g]) invalid_input("missing component dimension for '" + group.name(static_cast<int>(g)) + "'");
  if (group.identity() < 0) invalid_input("grading group has no identity element");

  std::vector<std::size_t> offsets(dims.size(), 0);
  std::size_t n = 0;
  for (std::size_t g = 0; g < dims.size(); ++g) {
    offsets[g] = n;
    n += dims[g];
  }
  std::vector<Vec<F>> products(n * n);
  std::vector<bool> filled(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // Degrees of the global indices.
      std::size_t ga = 0, gb = 0;
      while (ga + 1 < dims.size() && offsets[ga + 1] <= a) ++ga;
      while (gb + 1 < dims.size() && offsets[gb + 1] <= b) ++gb;
      auto target = static_cast<std::size_t>(group.mul(static_cast<int>(ga), static_cast<int>(gb)));
      products[a * n + b] = Vec<F>(dims[target], f.zero());
    }
  const auto& structure = member(j, "structure");
  if (!structure.is_array()) invalid_input("structure must be an array");
  for (const auto& entry : structure) {
    if (!entry.is_array() || entry.size() != 5) invalid_input("structure entries are [g, i, h, j, coeffs]");
    int g = parse_element(group, entry[0]);
    int h = parse_element(group, entry[2]);
    auto i = as_index(entry[1], "basis position");
    auto k = as_index(entry[3], "basis position");
    if (i >= dims[static_cast<std::size_t>(g)] || k >= dims[static_cast<std::size_t>(h)])
      invalid_input("basis position out of range in structure entry");
    std::size_t a = offsets[static_cast<std::size_t>(g)] + i, b = offsets[static_cast<std::size_t>(h)] + k;
    if (filled[a * n + b]) invalid_input("duplicate structure entry");
    filled[a * n + b] = true;
    auto target = static_cast<std::size_t>(group.mul(g, h));
    products[a * n + b] = parse_vector(f, entry[4], dims[target], "structure coefficients");
  }
  auto unit = parse_vector(f, member(j, "unit"), dims[static_cast<std::size_t>(group.identity())], "unit");
  Metadata meta;
  if (j.contains("meta")) {
    if (!j.at("meta").is_object()) invalid_input("meta must be an object");
    for (const auto& [k, v] : j.at("meta").items()) {
      if (!v.is_string()) invalid_input("meta values must be strings");
      meta.emplace_back(k, v.template get<std::string>());
    }
  }
  return GradedAlgebra<F>(f, std::move(group), std::move(dims), std::move(products), std::move(unit),
                          std::move(meta));
}

}  // namespace

template <Field F>
Json scalar_to_json(const F& f, const typename F::Elem& x) {
  if constexpr (F::finite) {
    (void)f;
    return Json(x);
  } else {
    return Json(f.format(x));
  }
}

template <Field F>
Json vector_to_json(const F& f, const Vec<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(f, x));
  return out;
}

template <Field F>
Json algebra_to_json(const GradedAlgebra<F>& a) {
  const F& f = a.field();
  const auto& g = a.group();
  Json j;
  if constexpr (F::finite)
    j["field"] = Json{{"type", "GF"}, {"p", f.order()}};
  else
    j["field"] = Json{{"type", "Q"}};
  j["group"] = Json{{"names", g.names()}, {"table", g.table()}};
  Json comps = Json::object();
  for (int x = 0; x < g.order(); ++x) comps[g.name(x)] = a.comp_dim(x);
  j["components"] = comps;
  Json structure = Json::array();
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = 0; q < a.dim(); ++q) {
      auto prod = a.product(p, q);
      if (is_zero_vec(f, prod)) continue;
      int gp = a.degree(p), gq = a.degree(q);
      structure.push_back(Json::array({g.name(gp), p - a.offset(gp), g.name(gq), q - a.offset(gq),
                                       vector_to_json(f, Vec<F>(prod.begin(), prod.end()))}));
    }
  j["structure"] = structure;
  j["unit"] = vector_to_json(f, a.unit());
  Json meta = Json::object();
  for (const auto& [k, v] : a.meta()) meta[k] = v;
  j["meta"] = meta;
  return j;
}

namespace {

AnyAlgebra algebra_from_json_unchecked(const Json& j) {
  const auto& field = member(j, "field");
  const auto& type = member(field, "type");
  if (!type.is_string()) invalid_input("field type must be a string");
  auto t = type.get<std::string>();
  if (t == "Q") return parse_algebra(RationalField(), j);
  if (t == "GF") {
    auto p = as_index(member(field, "p"), "field characteristic");
    if (p > 0x7fffffffULL) invalid_input("characteristic too large");
    return parse_algebra(PrimeField(static_cast<std::uint32_t>(p)), j);
  }
  invalid_input("unknown field type '" + t + "'");
}

}  // namespace

AnyAlgebra algebra_from_json(const Json& j) {
  try {
    return algebra_from_json_unchecked(j);
  } catch (const nlohmann::json::exception& e) {
    invalid_input(std::string("malformed algebra: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

AnyAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid_input("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    invalid_input("malformed JSON in '" + path + "': " + e.what());
  }
  return algebra_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) invalid_input("cannot write '" + path + "'");
  out << dump_json(j);
}

#define GRADED_INSTANTIATE_IO(F)                                          \
  template Json scalar_to_json(const F&, const typename F::Elem&);        \
  template Json vector_to_json(const F&, const Vec<F>&);                  \
  template Json algebra_to_json(const GradedAlgebra<F>&);

GRADED_INSTANTIATE_IO(PrimeField)
GRADED_INSTANTIATE_IO(RationalField)

}  // namespace graded
