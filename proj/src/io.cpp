#include "lie2/io.hpp"

#include <fstream>

namespace lie2 {

Json to_json(const Rat& x) { return format_rat(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, Index rows, Index cols) {
  RatMatrix m = RatMatrix::Zero(rows, cols);
  if (j.is_null()) return m;
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw InputError("expected a matrix with " + std::to_string(rows) + " rows");
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw InputError("expected " + std::to_string(cols) + " entries in row " + std::to_string(i));
    for (Index k = 0; k < cols; ++k) m(i, k) = rat_from_json(row[k]);
  }
  return m;
}

Json to_json(const std::vector<RatMatrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

namespace {

std::vector<RatMatrix> matrices_from_json(const Json& j, std::size_t count, Index rows, Index cols) {
  std::vector<RatMatrix> out;
  if (j.is_null()) return std::vector<RatMatrix>(count, RatMatrix::Zero(rows, cols));
  if (!j.is_array() || j.size() != count)
    throw InputError("expected a list of " + std::to_string(count) + " matrices");
  for (const auto& m : j) out.push_back(matrix_from_json(m, rows, cols));
  return out;
}

RatVector vector_from_json(const Json& j, Index n) {
  RatVector v = RatVector::Zero(n);
  if (j.is_null()) return v;
  if (!j.is_array() || static_cast<Index>(j.size()) != n)
    throw InputError("expected a vector of length " + std::to_string(n));
  for (Index i = 0; i < n; ++i) v(i) = rat_from_json(j[i]);
  return v;
}

Json vector_json(const RatVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

Index get_index(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw InputError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<Index>();
}

}  // namespace

Json to_json(const LieAlgebra& L) {
  Json j;
  j["kind"] = "lie_algebra";
  j["dim"] = L.dim();
  Json names = Json::array();
  for (Index i = 0; i < L.dim(); ++i)
    names.push_back(i < static_cast<Index>(L.basis_names().size()) ? L.basis_names()[i] : "e" + std::to_string(i));
  j["basis"] = names;
  Json br = Json::array();
  for (Index a = 0; a < L.dim(); ++a)
    for (Index b = a + 1; b < L.dim(); ++b) {
      Json coeffs = Json::object();
      for (Index k = 0; k < L.dim(); ++k)
        if (L.c(a, b, k) != 0) coeffs[std::to_string(k)] = to_json(L.c(a, b, k));
      if (!coeffs.empty()) br.push_back({{"i", a}, {"j", b}, {"coeffs", coeffs}});
    }
  j["brackets"] = br;
  return j;
}

Json to_json(const CrossedModule& X) {
  Json j;
  j["kind"] = "crossed_module";
  j["g"] = to_json(X.g);
  j["h"] = to_json(X.h);
  j["mu"] = to_json(X.mu);
  j["action"] = to_json(X.action);
  return j;
}

Json to_json(const TwoVect& t) {
  return {{"kind", "two_vect"}, {"Wdim", t.w_dim}, {"Vdim", t.v_dim}, {"phi", to_json(t.phi)}};
}

Json to_json(const TwoRep& r) {
  Json j;
  j["kind"] = "two_rep";
  j["xmod"] = to_json(r.source);
  j["twovect"] = to_json(r.target);
  j["rho00"] = to_json(r.rho00);
  j["rho01"] = to_json(r.rho01);
  j["rho1"] = to_json(r.rho1);
  return j;
}

Json to_json(const ExtensionData& d) {
  Json j;
  j["kind"] = "extension_data";
  j["omega0"] = to_json(d.omega0);
  j["alpha"] = to_json(d.alpha);
  j["varphi"] = to_json(d.varphi);
  return j;
}

Json to_json(const TrivExtensionData& t) {
  Json j;
  j["kind"] = "triv_extension_data";
  j["xmod"] = to_json(t.X);
  j["omega"] = vector_json(t.omega);
  j["varphi"] = vector_json(t.varphi);
  return j;
}

Json to_json(const Violation& v) {
  return {{"family", v.family}, {"where", v.where}, {"detail", v.detail}};
}

Json to_json(const Report& r) {
  Json a = Json::array();
  for (const auto& v : r) a.push_back(to_json(v));
  return {{"ok", r.empty()}, {"violations", a}};
}

Json cochain_dump(const CochainComplex& cx, const TriCochain& w) {
  Json out = Json::array();
  const Degree& d = w.degree;
  const TupleIndex& X = cx.xi_index(d.p, d.q);
  const TupleIndex& Z = cx.z_index(d.r);
  const Index vd = cx.value_dim(d.r);
  for (Index a = 0; a < X.size(); ++a)
    for (Index b = 0; b < Z.size(); ++b) {
      const RatVector val = w.coeffs.segment((a * Z.size() + b) * vd, vd);
      if (is_zero(RatMatrix(val))) continue;
      auto xi = X.tuple(a), z = Z.tuple(b);
      Json key = Json::array({Json(std::vector<Index>(xi.begin(), xi.end())), Json(std::vector<Index>(z.begin(), z.end()))});
      out.push_back({{"p", d.p}, {"q", d.q}, {"r", d.r}, {"key", key}, {"value", vector_json(val)}});
    }
  return out;
}

Json cochain_dump(const CochainComplex& cx, const TotalCochain& c) {
  Json out = Json::array();
  for (const Degree& d : CochainComplex::blocks(c.n))
    for (auto& e : cochain_dump(cx, part(cx, c, d))) out.push_back(std::move(e));
  return out;
}

Json to_json(const CochainComplex& cx, const CohomologyGroup& H) {
  Json reps = Json::array();
  for (Index j = 0; j < H.representatives.cols(); ++j)
    reps.push_back(cochain_dump(cx, TotalCochain{H.degree, H.representatives.col(j)}));
  return {{"degree", H.degree}, {"dim", H.dim}, {"representatives", reps}};
}

Json sparse_dump(const SparseRatMatrix& m) {
  std::vector<std::tuple<Index, Index, Rat>> entries;
  for (Index c = 0; c < m.outerSize(); ++c)
    for (SparseRatMatrix::InnerIterator it(m, c); it; ++it)
      if (it.value() != 0) entries.emplace_back(it.row(), it.col(), it.value());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  Json e = Json::array();
  for (const auto& [i, j, v] : entries) e.push_back({i, j, to_json(v)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

// ---------------------------------------------------------------- workspace

std::vector<std::string> Workspace::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return add(j, path.stem().string());
}

void Workspace::load_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) load_file(f);
}

std::vector<std::string> Workspace::add(const Json& j, const std::string& default_name) {
  std::vector<std::string> names;
  if (j.is_object() && j.contains("objects")) {
    for (const auto& o : j["objects"]) {
      auto n = add(o, "");
      names.insert(names.end(), n.begin(), n.end());
    }
    return names;
  }
  if (!j.is_object() || !j.contains("kind")) throw InputError("object without \"kind\"");
  std::string name = j.value("name", default_name);
  if (name.empty()) throw InputError("object without \"name\"");
  if (raw_.count(name) && raw_[name] != j) throw InputError("duplicate name " + name);
  raw_[name] = j;
  names.push_back(name);
  return names;
}

std::string Workspace::kind(const std::string& name) const {
  auto it = raw_.find(name);
  if (it == raw_.end()) throw InputError("unknown name " + name);
  return it->second["kind"].get<std::string>();
}

std::vector<std::string> Workspace::names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : raw_) out.push_back(n);
  return out;
}

const Json& Workspace::lookup(const std::string& name, const std::string& kind) const {
  auto it = raw_.find(name);
  if (it == raw_.end()) throw InputError("unknown name " + name);
  if (it->second["kind"] != kind) throw InputError(name + " is a " + it->second["kind"].get<std::string>() + ", not a " + kind);
  return it->second;
}

namespace {

// Guards against reference cycles between fixtures.
struct Resolving {
  std::set<std::string>& set;
  std::string name;
  Resolving(std::set<std::string>& s, const Json& j) : set(s) {
    if (j.is_string()) {
      name = j.get<std::string>();
      if (!set.insert(name).second) throw InputError("reference cycle through " + name);
    }
  }
  ~Resolving() {
    if (!name.empty()) set.erase(name);
  }
};

}  // namespace

LieAlgebra Workspace::lie_algebra(const std::string& name) const { return lie_algebra(Json(name)); }
CrossedModule Workspace::crossed_module(const std::string& name) const { return crossed_module(Json(name)); }
TwoVect Workspace::two_vect(const std::string& name) const { return two_vect(Json(name)); }
TwoRep Workspace::two_rep(const std::string& name) const { return two_rep(Json(name)); }

LieAlgebra Workspace::lie_algebra(const Json& ref) const {
  Resolving guard(resolving_, ref);
  const Json& j = ref.is_string() ? lookup(ref.get<std::string>(), "lie_algebra") : ref;
  const Index n = get_index(j, "dim");
  std::vector<std::string> names;
  if (j.contains("basis")) names = j["basis"].get<std::vector<std::string>>();
  if (!names.empty() && static_cast<Index>(names.size()) != n) throw InputError("basis names do not match dim");
  LieAlgebra L(n, names);
  for (const auto& b : j.value("brackets", Json::array())) {
    const Index i = get_index(b, "i"), k = get_index(b, "j");
    if (!(0 <= i && i < k && k < n)) throw InputError("brackets must be given for pairs i < j inside the basis");
    RatVector v = RatVector::Zero(n);
    for (const auto& [key, val] : b["coeffs"].items()) {
      const Index c = std::stoll(key);
      if (c < 0 || c >= n) throw InputError("bracket coefficient index out of range");
      v(c) = rat_from_json(val);
    }
    L.set_bracket(i, k, v);
  }
  return L;
}

CrossedModule Workspace::crossed_module(const Json& ref) const {
  Resolving guard(resolving_, ref);
  const Json& j = ref.is_string() ? lookup(ref.get<std::string>(), "crossed_module") : ref;
  const std::string how = j.value("construct", "explicit");
  if (how == "lie_algebra") return lie_algebra_as_xmod(lie_algebra(j.at("h")));
  if (how == "identity") return identity_xmod(lie_algebra(j.at("algebra")));
  if (how == "glphi") return glphi_as_crossed_module(glphi(two_vect(j.at("twovect"))));
  if (how == "tuple") {
    LieAlgebra h = lie_algebra(j.at("h"));
    const Index k = get_index(j, "ideal_dim");
    Subspace ideal(h.dim(), matrix_from_json(j.at("ideal"), h.dim(), k));
    QuotientAlgebra Q = quotient_algebra(h, ideal);
    const Index v = get_index(j, "vdim");
    LinRep rep{Q.algebra, v, matrices_from_json(j.value("rep", Json()), Q.algebra.dim(), v, v)};
    return from_tuple(h, ideal, v, rep);
  }
  if (how != "explicit") throw InputError("unknown crossed module construction " + how);
  CrossedModule X;
  X.g = lie_algebra(j.at("g"));
  X.h = lie_algebra(j.at("h"));
  X.mu = matrix_from_json(j.value("mu", Json()), X.h.dim(), X.g.dim());
  X.action = matrices_from_json(j.value("action", Json()), X.h.dim(), X.g.dim(), X.g.dim());
  return X;
}

TwoVect Workspace::two_vect(const Json& ref) const {
  Resolving guard(resolving_, ref);
  const Json& j = ref.is_string() ? lookup(ref.get<std::string>(), "two_vect") : ref;
  TwoVect t;
  t.w_dim = get_index(j, "Wdim");
  t.v_dim = get_index(j, "Vdim");
  t.phi = matrix_from_json(j.value("phi", Json()), t.v_dim, t.w_dim);
  return t;
}

TwoRep Workspace::two_rep(const Json& ref) const {
  Resolving guard(resolving_, ref);
  const Json& j = ref.is_string() ? lookup(ref.get<std::string>(), "two_rep") : ref;
  const std::string how = j.value("construct", "explicit");
  if (how == "adjoint") return adjoint_rep(crossed_module(j.at("xmod")));
  if (how == "trivial") return trivial_two_rep(crossed_module(j.at("xmod")), two_vect(j.at("twovect")));
  if (how == "tautological") return tautological_rep(two_vect(j.at("twovect")));
  if (how != "explicit") throw InputError("unknown representation construction " + how);
  TwoRep r;
  r.source = crossed_module(j.at("xmod"));
  r.target = two_vect(j.at("twovect"));
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  r.rho00 = matrices_from_json(j.value("rho00", Json()), m, v, v);
  r.rho01 = matrices_from_json(j.value("rho01", Json()), m, w, w);
  r.rho1 = matrices_from_json(j.value("rho1", Json()), n, w, v);
  return r;
}

ExtensionData Workspace::extension_data(const Json& j, const TwoRep& r) const {
  ExtensionData d = zero_data(r);
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  d.omega0 = matrix_from_json(j.value("omega0", Json()), v, binomial(m, 2));
  d.alpha = matrices_from_json(j.value("alpha", Json()), m, w, n);
  d.varphi = matrix_from_json(j.value("varphi", Json()), v, n);
  return d;
}

ExtensionData Workspace::extension_data(const std::string& name, const std::string& rep_override) const {
  const Json& j = lookup(name, "extension_data");
  if (rep_override.empty() && !j.contains("rep")) throw InputError(name + " names no representation; pass one");
  TwoRep r = rep_override.empty() ? two_rep(j["rep"]) : two_rep(rep_override);
  return extension_data(j, r);
}

TrivExtensionData Workspace::triv_extension_data(const std::string& name) const {
  const Json& j = lookup(name, "triv_extension_data");
  TrivExtensionData t;
  t.X = crossed_module(j.at("xmod"));
  t.omega = vector_from_json(j.value("omega", Json()), binomial(t.X.h.dim(), 2));
  t.varphi = vector_from_json(j.value("varphi", Json()), t.X.g.dim() + t.X.h.dim());
  return t;
}

}  // namespace lie2
